//! parcoh: computing with finite, degree-truncated partial groups.
//!
//! Exit codes: 0 on success, 1 on mathematical failure (axiom violations,
//! failed checks, empty bounded searches), 2 on structural errors (parse
//! failures, missing files, out-of-range degrees, exceeded search bounds).

mod report;

use clap::{Parser, Subcommand, ValueEnum};
use pgroup_core::PartialGroupTable;
use report::{CliError, Report};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

#[derive(Parser)]
#[command(
    name = "parcoh",
    version,
    about = "Computing with finite degree-truncated partial groups"
)]
struct Cli {
    /// Output format for reports
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Theory {
    Algebraic,
    Local,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Check the partial-group axioms of a spec file
    Validate { file: PathBuf },
    /// Build canonical partial groups and write their spec files
    Build {
        #[command(subcommand)]
        kind: BuildKind,
    },
    /// Compute a cohomology group of an action spec
    Cohomology {
        action: PathBuf,
        /// Cohomology degree n (needs truncation degree >= n + 1)
        #[arg(long)]
        degree: usize,
        /// Which cochain complex to use
        #[arg(long, value_enum, default_value_t = Theory::Algebraic)]
        theory: Theory,
    },
    /// Normalizer and center of a partial group
    Normalizer { file: PathBuf },
    /// Automorphisms and their homotopy classes
    Aut { file: PathBuf },
    /// Check whether eta defines a homotopy from g to f
    Homotopy {
        file: PathBuf,
        /// Element-map file for f
        #[arg(long)]
        f: PathBuf,
        /// Element-map file for g
        #[arg(long)]
        g: PathBuf,
        /// Element name of eta
        #[arg(long)]
        eta: String,
    },
    /// Build the twisted product of a twisting-pair spec
    Extend {
        #[arg(long)]
        pair: PathBuf,
        /// Output partial-group file; a .proj.json sidecar names the
        /// projection and the fiber inclusion
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Classify group extensions with a fixed outer action
    Classify {
        /// Kernel group (multiplication-table file)
        #[arg(long)]
        kernel: PathBuf,
        /// Quotient group (multiplication-table file)
        #[arg(long)]
        quotient: PathBuf,
        /// Outer-action file; omitted means the trivial action
        #[arg(long)]
        alpha: Option<PathBuf>,
        /// Prefix for representative spec files
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Count extensions of free partial groups by outer-action enumeration
    CountFree {
        /// Number of base generators
        #[arg(long)]
        x: usize,
        /// Number of fiber generators
        #[arg(long)]
        y: usize,
    },
}

#[derive(Subcommand)]
enum BuildKind {
    /// Bar construction of a finite group
    Bar {
        #[arg(long)]
        group: PathBuf,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Free partial group on a generator list
    Free {
        #[arg(long, value_delimiter = ',')]
        generators: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Cartesian product of two partial groups
    Product {
        a: PathBuf,
        b: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Twisted product of a twisting-pair spec
    Twisted {
        #[arg(long)]
        pair: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

/// Element-count bound for the exhaustive searches, overridable through
/// PARCOH_SEARCH_BOUND.
fn element_bound() -> usize {
    std::env::var("PARCOH_SEARCH_BOUND")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(homotopy_aut::DEFAULT_SEARCH_BOUND)
}

/// Candidate-count bound for the twisting-pair search in classification.
fn space_bound() -> usize {
    std::env::var("PARCOH_SEARCH_BOUND")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(100_000)
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Structural(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents)
        .map_err(|e| CliError::Structural(format!("cannot write {}: {e}", path.display())))
}

/// Loads a partial-group file and insists on a valid table; computations
/// assume the closure axioms.
fn load_table(path: &Path) -> Result<Arc<PartialGroupTable>, CliError> {
    let table = pgroup_core::file::from_json(&read(path)?)
        .map_err(|e| CliError::Structural(format!("{}: {e}", path.display())))?;
    let report = table.validate();
    if !report.is_valid() {
        return Err(CliError::Mathematical(format!(
            "{} is not a valid partial group:\n{report}",
            path.display()
        )));
    }
    Ok(Arc::new(table))
}

fn load_group(path: &Path) -> Result<constructions::FiniteGroupTable, CliError> {
    constructions::group_file::group_from_json(&read(path)?)
        .map_err(|e| CliError::Structural(format!("{}: {e}", path.display())))
}

fn sibling(path: &Path, name: &str) -> PathBuf {
    path.parent().unwrap_or(Path::new(".")).join(name)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(report) => {
            println!("{}", report.render(cli.format == Format::Json));
            ExitCode::SUCCESS
        }
        Err(CliError::Mathematical(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Structural(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<Report, CliError> {
    match command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Build { kind } => cmd_build(kind),
        Command::Cohomology {
            action,
            degree,
            theory,
        } => cmd_cohomology(&action, degree, theory),
        Command::Normalizer { file } => cmd_normalizer(&file),
        Command::Aut { file } => cmd_aut(&file),
        Command::Homotopy { file, f, g, eta } => cmd_homotopy(&file, &f, &g, &eta),
        Command::Extend { pair, output } => cmd_extend(&pair, &output),
        Command::Classify {
            kernel,
            quotient,
            alpha,
            output,
        } => cmd_classify(&kernel, &quotient, alpha.as_deref(), output.as_deref()),
        Command::CountFree { x, y } => cmd_count_free(x, y),
    }
}

fn cmd_validate(file: &Path) -> Result<Report, CliError> {
    let table = pgroup_core::file::from_json(&read(file)?)
        .map_err(|e| CliError::Structural(format!("{}: {e}", file.display())))?;
    let result = table.validate();
    if result.is_valid() {
        Ok(Report::new(
            format!("valid up to degree {}", table.max_degree()),
            serde_json::json!({
                "command": "validate",
                "valid": true,
                "max_degree": table.max_degree(),
                "violations": [],
            }),
        ))
    } else {
        let lines: Vec<String> = result.violations().iter().map(|v| v.to_string()).collect();
        Err(CliError::Mathematical(format!(
            "invalid partial group ({} violations):\n{}",
            lines.len(),
            lines.join("\n")
        )))
    }
}

fn cmd_build(kind: BuildKind) -> Result<Report, CliError> {
    let (table, output) = match kind {
        BuildKind::Bar {
            group,
            max_degree,
            output,
        } => {
            let g = load_group(&group)?;
            let table = constructions::bar(&g, max_degree)
                .map_err(|e| CliError::Structural(e.to_string()))?;
            (table, output)
        }
        BuildKind::Free {
            generators,
            max_degree,
            output,
        } => {
            let table = constructions::free_partial_group(&generators, max_degree)
                .map_err(|e| CliError::Structural(e.to_string()))?;
            (table, output)
        }
        BuildKind::Product { a, b, output } => {
            let ta = load_table(&a)?;
            let tb = load_table(&b)?;
            let table = constructions::product(&ta, &tb)
                .map_err(|e| CliError::Structural(e.to_string()))?;
            (table, output)
        }
        BuildKind::Twisted { pair, output } => return cmd_extend(&pair, &output),
    };
    write(&output, &pgroup_core::file::to_json(&table))?;
    Ok(Report::new(
        format!(
            "wrote {} ({} elements, degree {})",
            output.display(),
            table.element_count(),
            table.max_degree()
        ),
        serde_json::json!({
            "command": "build",
            "output": output.display().to_string(),
            "elements": table.element_count(),
            "max_degree": table.max_degree(),
        }),
    ))
}

fn cmd_cohomology(action_path: &Path, degree: usize, theory: Theory) -> Result<Report, CliError> {
    let file = cohomology::file::parse_action_file(&read(action_path)?)
        .map_err(|e| CliError::Structural(e.to_string()))?;
    let table = load_table(&sibling(action_path, &file.group))?;
    let action = cohomology::file::build_action(table, &file)
        .map_err(|e| CliError::Structural(e.to_string()))?;
    let degree_error = |e: cohomology::CohomologyError| match e {
        cohomology::CohomologyError::Truncation { degree, max_degree } => CliError::Structural(
            format!("degree {degree} needs a truncation degree above {max_degree}; rebuild the group with a larger --max-degree"),
        ),
        other => CliError::Structural(other.to_string()),
    };
    let mut text = Vec::new();
    let mut json = serde_json::Map::new();
    json.insert("command".into(), "cohomology".into());
    json.insert("degree".into(), degree.into());
    if theory != Theory::Local {
        let h = action.cohomology_group(degree).map_err(degree_error)?;
        text.push(format!("H^{degree} = {h}"));
        json.insert("algebraic".into(), h.to_string().into());
    }
    if theory != Theory::Algebraic {
        let sys = cohomology::LocalSystem::from_action(&action);
        let h = sys.cohomology_group(degree).map_err(degree_error)?;
        text.push(format!("H^{degree} (local coefficients) = {h}"));
        json.insert("local".into(), h.to_string().into());
    }
    if theory == Theory::Both {
        let equal = cohomology::compare_theories(&action, degree).map_err(degree_error)?;
        text.push(format!("theories agree: {equal}"));
        json.insert("equal".into(), equal.into());
    }
    Ok(Report::new(text.join("\n"), serde_json::Value::Object(json)))
}

fn cmd_normalizer(file: &Path) -> Result<Report, CliError> {
    let table = load_table(file)?;
    let norm = homotopy_aut::normalizer(&table);
    let center = homotopy_aut::center(&table);
    let names = |ids: &[usize]| -> Vec<String> {
        ids.iter().map(|&e| table.name(e).to_string()).collect()
    };
    let conj: serde_json::Map<String, serde_json::Value> = norm
        .elements
        .iter()
        .zip(&norm.conjugations)
        .map(|(&e, c)| {
            let map: std::collections::BTreeMap<String, String> = c.describe().into_iter().collect();
            (
                table.name(e).to_string(),
                serde_json::to_value(map).unwrap(),
            )
        })
        .collect();
    Ok(Report::new(
        format!(
            "normalizer (up to degree {}): {{{}}}\ncenter: {{{}}}",
            table.max_degree(),
            names(&norm.elements).join(", "),
            names(&center).join(", ")
        ),
        serde_json::json!({
            "command": "normalizer",
            "max_degree": table.max_degree(),
            "normalizer": names(&norm.elements),
            "center": names(&center),
            "conjugations": conj,
        }),
    ))
}

fn cmd_aut(file: &Path) -> Result<Report, CliError> {
    let table = load_table(file)?;
    let oc = homotopy_aut::outer_classes(&table, element_bound()).map_err(bound_error)?;
    let norm = homotopy_aut::normalizer(&table);
    let center = homotopy_aut::center(&table);
    let auts: Vec<std::collections::BTreeMap<String, String>> = oc
        .automorphisms
        .iter()
        .map(|a| a.describe().into_iter().collect())
        .collect();
    let exact =
        oc.automorphisms.len() * center.len() == norm.elements.len() * oc.classes.len();
    let text = format!(
        "automorphisms (up to degree {}): {}\nouter classes: {}\n|N| = {}, |Z| = {}, exactness |Aut|*|Z| = |N|*|Out|: {}",
        table.max_degree(),
        oc.automorphisms.len(),
        oc.classes.len(),
        norm.elements.len(),
        center.len(),
        exact
    );
    Ok(Report::new(
        text,
        serde_json::json!({
            "command": "aut",
            "max_degree": table.max_degree(),
            "automorphisms": auts,
            "outer_classes": oc.classes,
            "normalizer_order": norm.elements.len(),
            "center_order": center.len(),
            "exact": exact,
        }),
    ))
}

fn parse_map_file(table: &Arc<PartialGroupTable>, path: &Path) -> Result<Vec<usize>, CliError> {
    let value: serde_json::Value = serde_json::from_str(&read(path)?)
        .map_err(|e| CliError::Structural(format!("{}: {e}", path.display())))?;
    let entries = value
        .get("map")
        .and_then(|m| m.as_object())
        .ok_or_else(|| {
            CliError::Structural(format!("{}: expected an object under \"map\"", path.display()))
        })?;
    let mut map: Vec<usize> = (0..table.element_count()).collect();
    for (from, to) in entries {
        let from = table.element_by_name(from).ok_or_else(|| {
            CliError::Structural(format!("unknown element \"{from}\" in {}", path.display()))
        })?;
        let to_name = to.as_str().ok_or_else(|| {
            CliError::Structural(format!("map values must be strings in {}", path.display()))
        })?;
        map[from] = table.element_by_name(to_name).ok_or_else(|| {
            CliError::Structural(format!("unknown element \"{to_name}\" in {}", path.display()))
        })?;
    }
    Ok(map)
}

fn cmd_homotopy(file: &Path, f: &Path, g: &Path, eta: &str) -> Result<Report, CliError> {
    let table = load_table(file)?;
    let eta_id = table
        .element_by_name(eta)
        .ok_or_else(|| CliError::Structural(format!("unknown element \"{eta}\"")))?;
    let make = |path: &Path| -> Result<homotopy_aut::PGHom, CliError> {
        let map = parse_map_file(&table, path)?;
        homotopy_aut::PGHom::new(table.clone(), table.clone(), map)
            .map_err(|e| CliError::Mathematical(format!("{}: {e}", path.display())))
    };
    let f_hom = make(f)?;
    let g_hom = make(g)?;
    match homotopy_aut::check_homotopy(&f_hom, &g_hom, eta_id) {
        Ok(()) => Ok(Report::new(
            format!(
                "homotopy holds through {eta} up to degree {}",
                table.max_degree()
            ),
            serde_json::json!({
                "command": "homotopy",
                "holds": true,
                "eta": eta,
                "max_degree": table.max_degree(),
            }),
        )),
        Err(fail) => Err(CliError::Mathematical(format!("homotopy fails: {fail}"))),
    }
}

fn cmd_extend(pair_path: &Path, output: &Path) -> Result<Report, CliError> {
    let file = extensions::file::parse_pair_file(&read(pair_path)?)
        .map_err(|e| CliError::Structural(e.to_string()))?;
    let base = load_table(&sibling(pair_path, &file.base))?;
    let fiber = load_table(&sibling(pair_path, &file.fiber))?;
    let pair = extensions::file::build_pair(base, fiber, &file)
        .map_err(|e| CliError::Structural(e.to_string()))?;
    let report = pair.validate();
    if !report.is_valid() {
        return Err(CliError::Mathematical(format!(
            "twisting pair is invalid:\n{report}"
        )));
    }
    let ext = pair
        .twisted_product(None)
        .map_err(|e| CliError::Mathematical(e.to_string()))?;
    write(output, &pgroup_core::file::to_json(ext.total()))?;
    let projection: std::collections::BTreeMap<String, String> =
        ext.projection().describe().into_iter().collect();
    let inclusion: std::collections::BTreeMap<String, String> =
        ext.fiber_inclusion().describe().into_iter().collect();
    let sidecar = serde_json::json!({
        "total": output.display().to_string(),
        "projection": projection,
        "fiber_inclusion": inclusion,
    });
    let sidecar_path = output.with_extension("proj.json");
    write(&sidecar_path, &serde_json::to_string_pretty(&sidecar).unwrap())?;
    Ok(Report::new(
        format!(
            "wrote {} ({} elements) and {}",
            output.display(),
            ext.total().element_count(),
            sidecar_path.display()
        ),
        serde_json::json!({
            "command": "extend",
            "output": output.display().to_string(),
            "sidecar": sidecar_path.display().to_string(),
            "elements": ext.total().element_count(),
        }),
    ))
}

fn cmd_classify(
    kernel: &Path,
    quotient: &Path,
    alpha: Option<&Path>,
    output: Option<&str>,
) -> Result<Report, CliError> {
    let k = load_group(kernel)?;
    let h = load_group(quotient)?;
    let fiber = constructions::bar(&k, 3).map_err(|e| CliError::Structural(e.to_string()))?;
    let base = constructions::bar(&h, 3).map_err(|e| CliError::Structural(e.to_string()))?;

    let mut maps: Vec<Vec<usize>> = (0..base.element_count())
        .map(|_| (0..fiber.element_count()).collect())
        .collect();
    if let Some(alpha_path) = alpha {
        let value: serde_json::Value = serde_json::from_str(&read(alpha_path)?)
            .map_err(|e| CliError::Structural(format!("{}: {e}", alpha_path.display())))?;
        let entries = value
            .get("alpha")
            .and_then(|m| m.as_object())
            .ok_or_else(|| {
                CliError::Structural(format!(
                    "{}: expected an object under \"alpha\"",
                    alpha_path.display()
                ))
            })?;
        for (h_name, k_map) in entries {
            let g = base.element_by_name(h_name).ok_or_else(|| {
                CliError::Structural(format!("unknown quotient element \"{h_name}\""))
            })?;
            let obj = k_map.as_object().ok_or_else(|| {
                CliError::Structural("alpha values must be element maps".into())
            })?;
            for (from, to) in obj {
                let from = fiber.element_by_name(from).ok_or_else(|| {
                    CliError::Structural(format!("unknown kernel element \"{from}\""))
                })?;
                let to = to.as_str().and_then(|n| fiber.element_by_name(n)).ok_or_else(
                    || CliError::Structural("alpha values must name kernel elements".into()),
                )?;
                maps[g][from] = to;
            }
        }
    }

    let result = extensions::classify_group_extensions(&k, &h, &maps, space_bound());
    let classification = match result {
        Ok(c) => c,
        Err(extensions::ExtensionError::NoExtensionFound) => {
            return Err(CliError::Mathematical(
                extensions::ExtensionError::NoExtensionFound.to_string(),
            ))
        }
        Err(e) => return Err(CliError::Structural(e.to_string())),
    };

    let mut files = Vec::new();
    if let Some(prefix) = output {
        for (i, rep) in classification.representatives.iter().enumerate() {
            let path = PathBuf::from(format!("{prefix}_{i}.json"));
            write(&path, &pgroup_core::file::to_json(rep.total()))?;
            files.push(path.display().to_string());
        }
    }
    let text = format!(
        "H^2 = {}\nequivalence classes: {}\nrepresentatives found: {}{}",
        classification.h2,
        classification.count,
        classification.representatives.len(),
        if files.is_empty() {
            String::new()
        } else {
            format!("\nwrote {}", files.join(", "))
        }
    );
    Ok(Report::new(
        text,
        serde_json::json!({
            "command": "classify",
            "h2": classification.h2.to_string(),
            "count": classification.count.to_string(),
            "representatives": classification.representatives.len(),
            "files": files,
        }),
    ))
}

fn cmd_count_free(x: usize, y: usize) -> Result<Report, CliError> {
    let count = extensions::count_free_extensions(x, y, element_bound())
        .map_err(|e| CliError::Structural(e.to_string()))?;
    Ok(Report::new(
        format!("{count}"),
        serde_json::json!({
            "command": "count-free",
            "x": x,
            "y": y,
            "count": count.to_string(),
        }),
    ))
}

fn bound_error(e: homotopy_aut::SearchError) -> CliError {
    CliError::Structural(format!("{e}; raise PARCOH_SEARCH_BOUND"))
}
