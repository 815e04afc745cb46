use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::Group;
use crate::caps::Caps;
use crate::error::{GroupError, Result};
use crate::exec::Exec;

/// A permutation of `0..degree`, stored as its image list.
///
/// Products compose left to right: `(a * b)(x) = b(a(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree as u32).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn image(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(GroupError::NotAPermutation {
                    text: format!("{images:?}"),
                    reason: "images are not a bijection".into(),
                });
            }
            seen[x] = true;
        }
        Ok(Permutation(images.into_iter().map(|x| x as u32).collect()))
    }
}

/// Parses cycle notation (`"(1 2 3)(4 5)"`, points numbered from 1, `"()"` for
/// the identity) or one-line notation (`"[2, 3, 1]"`).
pub fn parse_permutation(degree: usize, text: &str) -> Result<Permutation> {
    let bad = |reason: &str| GroupError::NotAPermutation { text: text.to_string(), reason: reason.to_string() };
    let trimmed = text.trim();
    let parse_point = |tok: &str| -> Result<usize> {
        let v: usize = tok.parse().map_err(|_| bad(&format!("{tok:?} is not a point")))?;
        if v == 0 || v > degree {
            return Err(bad(&format!("point {v} outside 1..={degree}")));
        }
        Ok(v - 1)
    };
    if let Some(inner) = trimmed.strip_prefix('[') {
        let inner = inner.strip_suffix(']').ok_or_else(|| bad("unclosed '['"))?;
        let images = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_point)
            .collect::<Result<Vec<_>>>()?;
        if images.len() != degree {
            return Err(bad(&format!("expected {degree} images, found {}", images.len())));
        }
        return Permutation::from_images(images).map_err(|_| bad("images are not a bijection"));
    }
    let mut images: Vec<usize> = (0..degree).collect();
    let mut used = vec![false; degree];
    let mut rest = trimmed;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
        let close = body.find(')').ok_or_else(|| bad("unclosed '('"))?;
        let cycle = body[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_point)
            .collect::<Result<Vec<_>>>()?;
        for &x in &cycle {
            if used[x] {
                return Err(bad(&format!("point {} appears twice", x + 1)));
            }
            used[x] = true;
        }
        for (i, &x) in cycle.iter().enumerate() {
            images[x] = cycle[(i + 1) % cycle.len()];
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_images(images)
}

/// Cycle notation with 1-based points; the identity prints as `()`.
pub fn format_cycles(p: &Permutation) -> String {
    let n = p.degree();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || p.image(start) == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            cycle.push((x + 1).to_string());
            x = p.image(x);
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Enumerates the group generated by permutations of `1..=degree` and
/// returns it as a Cayley table labelled by cycle notation.
///
/// Elements are numbered in breadth-first order from the identity.
pub fn group_from_permutations<S: AsRef<str>>(degree: usize, generators: &[S], caps: &Caps) -> Result<Group> {
    if degree == 0 {
        return Err(GroupError::ParameterOutOfRange("permutation degree must be positive".into()));
    }
    let gens = generators.iter().map(|g| parse_permutation(degree, g.as_ref())).collect::<Result<Vec<_>>>()?;
    group_from_permutation_list(degree, &gens, caps, Exec::default())
}

fn group_from_permutation_list(degree: usize, gens: &[Permutation], caps: &Caps, exec: Exec) -> Result<Group> {
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    let mut elements = vec![Permutation::identity(degree)];
    index.insert(elements[0].clone(), 0);
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let y = elements[i].then(g);
            if !index.contains_key(&y) {
                if elements.len() + 1 > caps.closure {
                    return Err(GroupError::OrderCapExceeded {
                        what: "permutation closure".into(),
                        order: elements.len() + 1,
                        cap: caps.closure,
                    });
                }
                index.insert(y.clone(), elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    let n = elements.len();
    let rows =
        exec.map_range(n, |a| (0..n).map(|b| index[&elements[a].then(&elements[b])] as u32).collect::<Vec<u32>>());
    let labels = elements.iter().map(format_cycles).collect();
    Group::from_flat(n, rows.concat(), Some(labels), None, exec)
}

/// JSON form: `{"degree": d, "generators": ["(1 2 3)", "(1 2)"]}`.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct PermutationGroupJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub degree: usize,
    pub generators: Vec<String>,
}

impl PermutationGroupJson {
    pub fn build(&self, caps: &Caps) -> Result<Group> {
        let g = group_from_permutations(self.degree, &self.generators, caps)?;
        Ok(match &self.name {
            Some(name) => g.named(name.clone()),
            None => g,
        })
    }
}
