mod source;

use std::collections::BTreeSet;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use automizer_core::catalog::{default_catalog, find_entry, load_catalog, save_catalog, CatalogEntry};
use automizer_core::harness::{check_ids, render_table, run_all, HarnessConfig};
use automizer_core::predicates::{has_large_automizer, has_small_automizer, Analysis, Property, PropertyReport};
use automizer_core::subgroup::{automizer, generated_subgroup};
use automizer_core::{Caps, Exec};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

const DEFAULT_CATALOG: &str = "catalog.json";

#[derive(Parser, Debug)]
#[command(name = "automizer-lab", version, about = "Automizer computations and structural checks on finite groups")]
struct Cli {
    /// Catalog file. When unset and catalog.json is absent, the built-in
    /// catalog is used.
    #[arg(long, global = true, env = "AUTOMIZER_LAB_CATALOG")]
    catalog: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Comma-separated verifier ids for `verify`.
    #[arg(long, global = true, value_delimiter = ',', value_parser = parse_verifier_id)]
    only: Vec<String>,

    /// Largest group order built by closure.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap_closure: Option<u64>,
    /// Largest order whose full subgroup lattice is enumerated.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap_lattice: Option<u64>,
    /// Largest order for isomorphism tests.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap_iso: Option<u64>,
    /// Largest order for automorphism group enumeration.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    cap_aut: Option<u64>,

    /// Run without the thread pool.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Report properties of a group.
    Check {
        /// A JSON table or permutation file, or a catalog entry name.
        source: String,
        /// Comma-separated property names; all when omitted.
        #[arg(long, value_delimiter = ',')]
        properties: Vec<String>,
    },
    /// Automizer N_G(H)/C_G(H) of the subgroup generated by `--gen`.
    Automizer {
        source: String,
        /// A generator: element label, permutation, or element index.
        #[arg(long = "gen", required = true)]
        generators: Vec<String>,
    },
    /// Run the verifiers over the catalog. Exits 1 if any verifier fails.
    Verify,
    /// List, build, or describe catalog entries.
    #[command(subcommand)]
    Catalog(CatalogCommand),
}

#[derive(Subcommand, Debug)]
enum CatalogCommand {
    /// List entries with order and tags.
    List,
    /// Write the built-in catalog to the catalog path.
    Build,
    /// Print an entry's table and property report.
    Describe { name: String },
}

fn parse_verifier_id(s: &str) -> std::result::Result<String, String> {
    check_ids(&[s]).map(|()| s.to_string()).map_err(|e| e.to_string())
}

impl Cli {
    fn caps(&self) -> Result<Caps> {
        let d = Caps::default();
        let pick = |flag: Option<u64>, default: usize| flag.map_or(default, |v| v as usize);
        let caps = Caps {
            closure: pick(self.cap_closure, d.closure),
            lattice: pick(self.cap_lattice, d.lattice),
            iso: pick(self.cap_iso, d.iso),
            aut: pick(self.cap_aut, d.aut),
            ..d
        };
        caps.validate()?;
        Ok(caps)
    }

    fn exec(&self) -> Exec {
        if self.sequential {
            Exec::Sequential
        } else {
            Exec::default()
        }
    }

    fn catalog_path(&self) -> PathBuf {
        self.catalog.clone().unwrap_or_else(|| PathBuf::from(DEFAULT_CATALOG))
    }

    fn load_catalog(&self, caps: &Caps) -> Result<Vec<CatalogEntry>> {
        let path = self.catalog_path();
        if self.catalog.is_none() && !path.exists() {
            return Ok(default_catalog(caps)?);
        }
        load_catalog(&path).with_context(|| format!("loading catalog {}", path.display()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain().any(|c| c.downcast_ref::<std::io::Error>().is_some_and(|io| io.kind() == std::io::ErrorKind::BrokenPipe))
}

fn run(cli: &Cli) -> Result<ExitCode> {
    let caps = cli.caps()?;
    let mut out = std::io::stdout().lock();
    match &cli.command {
        Command::Check { source, properties } => {
            let properties =
                properties.iter().map(|p| p.parse::<Property>()).collect::<std::result::Result<Vec<_>, _>>()?;
            let group = source::load_group(cli, source, &caps)?;
            let analysis = Analysis::new(group, caps).with_exec(cli.exec());
            let report = PropertyReport::compute(&analysis, &properties);
            write_report(&mut out, cli.format, &report)?;
        }
        Command::Automizer { source, generators } => {
            let g = source::load_group(cli, source, &caps)?;
            let gens = generators.iter().map(|s| source::resolve_element(&g, s)).collect::<Result<Vec<_>>>()?;
            let h = generated_subgroup(&g, &gens)?;
            let aut = automizer(&g, &h)?;
            let small = has_small_automizer(&g, &h, &caps).map(|v| v.value).map_err(|e| e.to_string());
            let large = has_large_automizer(&g, &h, &caps).map(|v| v.value).map_err(|e| e.to_string());
            let verdict = |r: &std::result::Result<bool, String>| match r {
                Ok(v) => json!(v),
                Err(e) => json!({ "error": e }),
            };
            let summary = json!({
                "subgroup_order": h.order(),
                "normalizer_order": aut.normalizer.order(),
                "centralizer_order": aut.centralizer.order(),
                "automizer_order": aut.order(),
                "small": verdict(&small),
                "large": verdict(&large),
            });
            match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&summary)?)?,
                Format::Table => {
                    let show = |r: &std::result::Result<bool, String>| match r {
                        Ok(v) => v.to_string(),
                        Err(e) => format!("error: {e}"),
                    };
                    writeln!(out, "|H|        {}", h.order())?;
                    writeln!(out, "|N_G(H)|   {}", aut.normalizer.order())?;
                    writeln!(out, "|C_G(H)|   {}", aut.centralizer.order())?;
                    writeln!(out, "|Aut_G(H)| {}", aut.order())?;
                    writeln!(out, "small      {}", show(&small))?;
                    writeln!(out, "large      {}", show(&large))?;
                }
            }
        }
        Command::Verify => {
            let catalog = cli.load_catalog(&caps)?;
            let config =
                HarnessConfig { caps, only: cli.only.iter().cloned().collect::<BTreeSet<_>>(), exec: cli.exec() };
            let report = run_all(&catalog, &config)?;
            match cli.format {
                Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(&report.results)?)?,
                Format::Table => write!(out, "{}", render_table(&report))?,
            }
            if !report.all_passed() {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Catalog(CatalogCommand::List) => {
            let catalog = cli.load_catalog(&caps)?;
            match cli.format {
                Format::Json => {
                    let rows: Vec<_> = catalog
                        .iter()
                        .map(|e| json!({ "name": e.name, "order": e.group.order(), "tags": e.tags }))
                        .collect();
                    writeln!(out, "{}", serde_json::to_string_pretty(&rows)?)?;
                }
                Format::Table => {
                    for e in &catalog {
                        let tags: Vec<&str> = e.tags.iter().map(String::as_str).collect();
                        writeln!(out, "{:<18} {:>5}  {}", e.name, e.group.order(), tags.join(" "))?;
                    }
                    writeln!(out, "{} entries", catalog.len())?;
                }
            }
        }
        Command::Catalog(CatalogCommand::Build) => {
            let catalog = default_catalog(&caps)?;
            let path = cli.catalog_path();
            save_catalog(&catalog, &path).with_context(|| format!("writing {}", path.display()))?;
            writeln!(out, "wrote {} entries to {}", catalog.len(), path.display())?;
        }
        Command::Catalog(CatalogCommand::Describe { name }) => {
            let catalog = cli.load_catalog(&caps)?;
            let Some(entry) = find_entry(&catalog, name) else { bail!("no catalog entry named {name:?}") };
            let analysis = Analysis::new(entry.group.clone(), caps).with_exec(cli.exec());
            let report = PropertyReport::compute(&analysis, &[]);
            match cli.format {
                Format::Json => {
                    let doc = json!({ "entry": entry, "report": report });
                    writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
                }
                Format::Table => {
                    writeln!(out, "{} (order {})", entry.name, entry.group.order())?;
                    for (i, row) in entry.group.rows().iter().enumerate() {
                        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
                        writeln!(out, "{:>3} {:<14}|{}", i, entry.group.label(i), cells.join(""))?;
                    }
                    write_report(&mut out, Format::Table, &report)?;
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn write_report(out: &mut impl Write, format: Format, report: &PropertyReport) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(report)?)?,
        Format::Table => {
            writeln!(out, "{} (order {}, id {})", report.group, report.order, report.id)?;
            for (name, v) in &report.properties {
                writeln!(out, "{:<22} {:<5}  {}", name, v.value, v.detail)?;
            }
            for (name, e) in &report.errors {
                writeln!(out, "{:<22} error  {}", name, e)?;
            }
        }
    }
    Ok(())
}
