//! Command-line front end: catalog dumps, mesh generation, verification
//! suites and exports.
//!
//! Exit codes are a stable contract: 0 when every check passes, 1 when a
//! verification check fails, 2 on usage or configuration errors.

use std::f64::consts::PI;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::{self, CatalogEntry, EntireGraph, ImplicitSurface};
use crate::error::{Result, ZmcError};
use crate::mesh::{Mesh, MeshFormat};
use crate::paracomplex::ParaComplex;
use crate::report::{to_json_string, Report};
use crate::verify::{self, CensusOptions, Mode, SingularScanOptions, Window};
use crate::weierstrass::{data, Formula, Kind, Placement, SurfacePatch, WeierstrassData};

#[derive(Parser, Debug)]
#[command(name = "zmc", version, about = "Zero mean curvature surfaces in Lorentz-Minkowski 3-space")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub flags: Flags,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List catalog entries or show one of them.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
    /// Sample a patch or graph into a mesh file plus a CSV sidecar.
    Generate,
    /// Run a verification suite and print its JSON report.
    Verify { suite: Option<Suite> },
    /// Dump the catalog (JSON) or the samples of one surface (CSV).
    Export,
}

#[derive(Subcommand, Debug)]
pub enum CatalogAction {
    List,
    Show { name: String },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Zmc,
    Membership,
    Census,
    Singular,
    Congruence,
    Umbilic,
    Identities,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Flags {
    /// Catalog entry (`scherk_S1p`) or data set (`enneper`, `plane`, `scherk`, `catenoid`).
    #[arg(long, global = true)]
    pub surface: Option<String>,
    /// Representation formula: F1, F2, F3 or F4.
    #[arg(long, global = true)]
    pub formula: Option<String>,
    /// Data-set component: dplus / dminus (Scherk), npos / nneg (catenoid).
    #[arg(long, global = true)]
    pub region: Option<String>,
    /// Entire graph entry, e.g. `graph_S1p`.
    #[arg(long, global = true)]
    pub graph: Option<String>,
    /// Implicit surface to test against, e.g. `S1p` or `enneper_E4`.
    #[arg(long, global = true)]
    pub implicit: Option<String>,
    /// Second implicit surface of a congruence check.
    #[arg(long, global = true)]
    pub target: Option<String>,
    /// `x_min,x_max,y_min,y_max`; accepts multiples of pi such as `-4pi` or `pi/2`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub window: Option<String>,
    /// Samples per side of the window or parameter rectangle
    #[arg(long, global = true)]
    pub grid: Option<usize>,
    /// Pass threshold of the suite (a lower bound for `umbilic`)
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    /// Output file; `generate` requires it, `export` defaults to stdout
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// obj, ply, csv or json.
    #[arg(long, global = true)]
    pub format: Option<String>,
    /// analytic or fd (ZMC suite).
    #[arg(long, global = true)]
    pub mode: Option<String>,
    /// Census: minimum number of time-like components required to pass.
    #[arg(long, global = true)]
    pub min_timelike: Option<usize>,
    /// JSON file with a RunConfig; flags override its values.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Print the resolved RunConfig and exit.
    #[arg(long, global = true)]
    pub print_config: bool,
}

/// Everything a run needs. Serialized as JSON for `--config` files.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<String>,
    pub suite: Option<Suite>,
    pub surface: Option<String>,
    pub formula: Option<String>,
    pub region: Option<String>,
    pub graph: Option<String>,
    pub implicit: Option<String>,
    pub target: Option<String>,
    /// `[x_min, x_max, y_min, y_max]`.
    pub window: Option<[f64; 4]>,
    pub grid: Option<usize>,
    pub tol: Option<f64>,
    pub out: Option<PathBuf>,
    pub format: Option<String>,
    pub mode: Option<String>,
    pub min_timelike: Option<usize>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<RunConfig> {
        let text = fs::read_to_string(path).map_err(|e| ZmcError::Io(format!("{}: {e}", path.display())))?;
        serde_json::from_str(&text).map_err(|e| ZmcError::Config(format!("{}: {e}", path.display())))
    }

    /// `self` with every field that `other` sets replaced.
    pub fn overridden_by(self, other: RunConfig) -> RunConfig {
        RunConfig {
            command: other.command.or(self.command),
            suite: other.suite.or(self.suite),
            surface: other.surface.or(self.surface),
            formula: other.formula.or(self.formula),
            region: other.region.or(self.region),
            graph: other.graph.or(self.graph),
            implicit: other.implicit.or(self.implicit),
            target: other.target.or(self.target),
            window: other.window.or(self.window),
            grid: other.grid.or(self.grid),
            tol: other.tol.or(self.tol),
            out: other.out.or(self.out),
            format: other.format.or(self.format),
            mode: other.mode.or(self.mode),
            min_timelike: other.min_timelike.or(self.min_timelike),
        }
    }

    pub fn from_flags(f: &Flags) -> Result<RunConfig> {
        Ok(RunConfig {
            surface: f.surface.clone(),
            formula: f.formula.clone(),
            region: f.region.clone(),
            graph: f.graph.clone(),
            implicit: f.implicit.clone(),
            target: f.target.clone(),
            window: f.window.as_deref().map(parse_window).transpose()?,
            grid: f.grid,
            tol: f.tol,
            out: f.out.clone(),
            format: f.format.clone(),
            mode: f.mode.clone(),
            min_timelike: f.min_timelike,
            ..RunConfig::default()
        })
    }

    fn window(&self) -> Result<Option<Window>> {
        match self.window {
            None => Ok(None),
            Some([a, b, c, d]) if a < b && c < d && [a, b, c, d].iter().all(|v| v.is_finite()) => {
                Ok(Some(Window::new(a, b, c, d)))
            }
            Some(w) => Err(ZmcError::Config(format!("window {w:?} must satisfy x_min < x_max and y_min < y_max"))),
        }
    }

    fn grid(&self, default: usize) -> Result<usize> {
        match self.grid.unwrap_or(default) {
            0 => Err(ZmcError::Config("grid must be positive".into())),
            n => Ok(n),
        }
    }
}

fn parse_number(tok: &str) -> Result<f64> {
    let t = tok.trim().to_ascii_lowercase();
    let bad = || ZmcError::Config(format!("cannot read `{tok}` as a number"));
    if let Some((num, den)) = t.split_once('/') {
        let den: f64 = den.trim().parse().map_err(|_| bad())?;
        return Ok(parse_number(num)? / den);
    }
    if let Some(coeff) = t.strip_suffix("pi") {
        let coeff = coeff.trim_end_matches('*');
        let c = match coeff {
            "" | "+" => 1.0,
            "-" => -1.0,
            c => c.parse::<f64>().map_err(|_| bad())?,
        };
        return Ok(c * PI);
    }
    t.parse().map_err(|_| bad())
}

/// `"-4pi,4pi,-6,6"` → `[−4π, 4π, −6, 6]`.
pub fn parse_window(s: &str) -> Result<[f64; 4]> {
    let parts: Vec<f64> = s.split(',').map(parse_number).collect::<Result<_>>()?;
    <[f64; 4]>::try_from(parts)
        .map_err(|_| ZmcError::Config(format!("window `{s}` needs four comma-separated values")))
}

fn parse_formula(s: &str) -> Result<Formula> {
    s.parse().map_err(|_| ZmcError::Config(format!("unknown formula `{s}` (expected F1..F4)")))
}

fn parse_implicit(s: &str) -> Result<ImplicitSurface> {
    ImplicitSurface::from_name(s).ok_or_else(|| ZmcError::Config(format!("unknown implicit surface `{s}`")))
}

fn parse_mode(s: Option<&str>) -> Result<Mode> {
    match s.unwrap_or("analytic") {
        "analytic" => Ok(Mode::Analytic),
        "fd" => Ok(Mode::Fd),
        other => Err(ZmcError::Config(format!("unknown mode `{other}` (expected analytic or fd)"))),
    }
}

fn parse_format(s: &str) -> Result<MeshFormat> {
    match s {
        "obj" => Ok(MeshFormat::Obj),
        "ply" => Ok(MeshFormat::Ply),
        "csv" => Ok(MeshFormat::Csv),
        other => Err(ZmcError::Config(format!("unknown mesh format `{other}` (expected obj, ply or csv)"))),
    }
}

/// What a run samples.
enum Target {
    Patch {
        name: String,
        patch: Box<SurfacePatch>,
        implicit: Option<ImplicitSurface>,
    },
    Graph {
        graph: EntireGraph,
        implicit: Option<ImplicitSurface>,
    },
}

fn family_data(name: &str, region: Option<&str>) -> Result<Option<WeierstrassData>> {
    let bad_region = |r: &str| ZmcError::Config(format!("region `{r}` does not apply to `{name}`"));
    let d = match (name, region) {
        ("enneper", None | Some("square3")) => data::enneper(),
        ("plane", None | Some("square3")) => data::plane(),
        ("scherk", None | Some("dplus" | "d+" | "D+")) | ("scherk_dplus", None) => data::scherk(true),
        ("scherk", Some("dminus" | "d-" | "D-")) | ("scherk_dminus", None) => data::scherk(false),
        ("catenoid", None | Some("npos" | "positive")) | ("catenoid_npos", None) => data::catenoid(true),
        ("catenoid", Some("nneg" | "negative")) | ("catenoid_nneg", None) => data::catenoid(false),
        ("enneper" | "plane" | "scherk" | "catenoid" | "scherk_dplus" | "scherk_dminus", Some(r))
        | ("catenoid_npos" | "catenoid_nneg", Some(r)) => return Err(bad_region(r)),
        _ => return Ok(None),
    };
    Ok(Some(d))
}

/// The catalog entry built from these data and formula, if any.
fn entry_for(data_name: &str, formula: Formula) -> Option<CatalogEntry> {
    catalog::list()
        .into_iter()
        .find(|e| e.formula == Some(formula) && e.data.as_ref().is_some_and(|d| d.name == data_name))
}

fn graph_entry(name: &str) -> Result<(EntireGraph, Option<ImplicitSurface>)> {
    let e = catalog::get(name)?;
    let g = e
        .graph
        .ok_or_else(|| ZmcError::Config(format!("`{name}` is not an entire graph; use --surface")))?;
    Ok((g, e.implicit))
}

fn resolve_target(cfg: &RunConfig, default_surface: Option<&str>) -> Result<Target> {
    let window = cfg.window()?;
    let mut target = match (&cfg.graph, &cfg.surface) {
        (Some(_), Some(_)) => return Err(ZmcError::Config("give either --surface or --graph, not both".into())),
        (Some(g), None) => {
            let (graph, implicit) = graph_entry(g)?;
            Target::Graph { graph, implicit }
        }
        (None, s) => {
            let name = s
                .as_deref()
                .or(default_surface)
                .ok_or_else(|| ZmcError::Config("--surface or --graph is required".into()))?;
            resolve_surface(name, cfg)?
        }
    };
    if let Target::Patch { patch, .. } = &mut target {
        if let Some(w) = window {
            let p = SurfacePatch::new(patch.data.clone().with_rect(w.to_rect()), patch.formula)
                .with_placement(patch.placement);
            **patch = p;
        }
    }
    if let Some(s) = &cfg.implicit {
        let s = parse_implicit(s)?;
        match &mut target {
            Target::Patch { implicit, .. } | Target::Graph { implicit, .. } => *implicit = Some(s),
        }
    }
    Ok(target)
}

fn resolve_surface(name: &str, cfg: &RunConfig) -> Result<Target> {
    let formula = cfg.formula.as_deref().map(parse_formula).transpose()?;
    if catalog::NAMES.contains(&name) {
        let entry = catalog::get(name)?;
        if cfg.region.is_some() {
            return Err(ZmcError::Config(format!(
                "--region applies to data-set names; `{name}` already fixes its region"
            )));
        }
        if let Some(graph) = entry.graph {
            return Ok(Target::Graph {
                graph,
                implicit: entry.implicit,
            });
        }
        let data = entry.data.clone().ok_or_else(|| {
            ZmcError::Config(format!("`{name}` is known only through its implicit equation; nothing to sample"))
        })?;
        let f = formula.or(entry.formula).expect("patch entries carry a formula");
        if Some(f) == entry.formula {
            return Ok(Target::Patch {
                name: name.to_string(),
                patch: Box::new(entry.patch().expect("entry has data")),
                implicit: entry.implicit,
            });
        }
        return Ok(patch_target(data, f));
    }
    match family_data(name, cfg.region.as_deref())? {
        Some(d) => Ok(patch_target(d, formula.unwrap_or(Formula::F1))),
        None => Err(ZmcError::UnknownEntry(name.to_string())),
    }
}

fn patch_target(d: WeierstrassData, f: Formula) -> Target {
    match entry_for(&d.name, f) {
        Some(e) => Target::Patch {
            name: e.name.to_string(),
            patch: Box::new(e.patch().expect("entry has data")),
            implicit: e.implicit,
        },
        None => Target::Patch {
            name: format!("{}_{f}", d.name),
            patch: Box::new(SurfacePatch::new(d, f).with_placement(Placement::default())),
            implicit: None,
        },
    }
}

fn default_graph_window(g: &EntireGraph) -> Window {
    match g.name {
        "graph_S1p" | "graph_K4" => Window::new(-4.0 * PI, 4.0 * PI, -6.0, 6.0),
        _ => Window::square(5.0),
    }
}

fn graph_for_suite(cfg: &RunConfig) -> Result<EntireGraph> {
    let name = cfg.graph.as_deref().or(cfg.surface.as_deref()).unwrap_or("graph_S1p");
    Ok(graph_entry(name)?.0)
}

fn location(p: crate::Point3) -> Vec<f64> {
    p.to_array().to_vec()
}

fn suite_zmc(cfg: &RunConfig) -> Result<Report> {
    let g = graph_for_suite(cfg)?;
    let window = cfg.window()?.unwrap_or_else(|| default_graph_window(&g));
    let n = cfg.grid(200)?;
    let mode = parse_mode(cfg.mode.as_deref())?;
    let z = verify::zmc_scan(&g, window, n, mode)?;
    let mut r = Report::new("zmc", cfg.tol.unwrap_or(1e-10)).count("samples", z.samples);
    r.pass = z.samples > 0 && z.max_residual <= r.tol;
    r.window = Some(window);
    r.grid = Some(n);
    r.max_residual = Some(z.max_residual);
    r.argmax_location = z.argmax_location.map(|a| a.to_vec());
    r.details = json!({ "graph": g.name, "formula": g.formula(), "mode": z.mode });
    Ok(r)
}

fn suite_membership(cfg: &RunConfig) -> Result<Report> {
    let (points, implicit, window, n, name) = match resolve_target(cfg, None)? {
        Target::Graph { graph, implicit } => {
            let w = cfg.window()?.unwrap_or_else(|| default_graph_window(&graph));
            let n = cfg.grid(100)?;
            let pts = verify::graph_samples(&graph, w, n).into_iter().map(|(p, _)| p).collect();
            (pts, implicit, w, n, graph.name.to_string())
        }
        Target::Patch { name, patch, implicit } => {
            let n = cfg.grid(50)?;
            (verify::patch_samples(&patch, n)?, implicit, Window::from(patch.region().rect), n, name)
        }
    };
    let s = implicit.ok_or_else(|| ZmcError::Config(format!("`{name}` has no implicit equation; pass --implicit")))?;
    let m = verify::membership_report(&points, s);
    let mut r = Report::new("membership", cfg.tol.unwrap_or(1e-7)).count("samples", m.samples);
    r.pass = m.samples > 0 && m.max_residual <= r.tol;
    r.window = Some(window);
    r.grid = Some(n);
    r.max_residual = Some(m.max_residual);
    r.argmax_location = m.argmax_location.map(location);
    r.details = json!({ "surface": name, "implicit": s.name(), "equation": s.formula() });
    Ok(r)
}

fn suite_census(cfg: &RunConfig) -> Result<Report> {
    let g = graph_for_suite(cfg)?;
    let window = cfg.window()?.unwrap_or_else(|| default_graph_window(&g));
    let n = cfg.grid(400)?;
    let opts = CensusOptions {
        tau: cfg.tol.unwrap_or(verify::TAU_LIGHT),
        ..CensusOptions::default()
    };
    let c = verify::component_census(&g, window, n, opts)?;
    let min_timelike = cfg.min_timelike.unwrap_or(1);
    let mut r = Report::new("census", opts.tau)
        .count("spacelike_components", c.spacelike_components)
        .count("timelike_components", c.timelike_components)
        .count("lightlike_cells", c.lightlike_cells);
    r.pass = c.spacelike_components == 1 && c.timelike_components >= min_timelike;
    r.window = Some(window);
    r.grid = Some(n);
    r.details = json!({
        "graph": g.name,
        "edge_samples": c.edge_samples,
        "min_timelike": min_timelike,
        "components": c.components,
    });
    Ok(r)
}

/// Known degenerate curve of the Enneper data inside the rectangle.
fn enneper_singular_curve(kind: Kind, rect: crate::paraholo::Rect) -> (Vec<ParaComplex>, &'static str) {
    const N: usize = 4000;
    let mut out = Vec::new();
    match kind {
        Kind::First => {
            let reach = rect.v_min.abs().max(rect.v_max.abs()).asinh() + 1e-9;
            for k in 0..=N {
                let tau = -reach + 2.0 * reach * k as f64 / N as f64;
                for sign in [1.0, -1.0] {
                    out.push(ParaComplex::new(sign * tau.cosh(), tau.sinh()));
                }
            }
            out.retain(|z| z.re >= rect.u_min && z.re <= rect.u_max && z.im >= rect.v_min && z.im <= rect.v_max);
            (out, "u^2 - v^2 = 1")
        }
        Kind::Third => {
            if rect.u_min <= 0.0 && rect.u_max >= 0.0 {
                for k in 0..=N {
                    out.push(ParaComplex::new(0.0, rect.v_min + (rect.v_max - rect.v_min) * k as f64 / N as f64));
                }
            }
            (out, "u = 0")
        }
    }
}

fn suite_singular(cfg: &RunConfig) -> Result<Report> {
    let Target::Patch { name, patch, .. } = resolve_target(cfg, Some("enneper"))? else {
        return Err(ZmcError::Config("the singular suite needs a parametrized --surface".into()));
    };
    let n = cfg.grid(400)?;
    let scan = verify::singular_locus_scan(&patch, n, SingularScanOptions::default());
    let rect = patch.region().rect;
    let mut r = Report::new("singular", cfg.tol.unwrap_or(2.0 * scan.step))
        .count("points", scan.points.len())
        .count("clusters", scan.clusters.len())
        .count("excluded", scan.excluded);
    r.window = Some(Window::from(rect));
    r.grid = Some(n);
    let mut details = json!({
        "surface": name,
        "formula": patch.formula.to_string(),
        "step": scan.step,
        "cluster_sizes": scan.clusters.iter().map(Vec::len).collect::<Vec<_>>(),
        "reference": Value::Null,
    });
    if patch.data.name == "enneper" {
        let (curve, label) = enneper_singular_curve(patch.formula.kind(), rect);
        details["reference"] = json!(label);
        let dist = match (scan.points.is_empty(), curve.is_empty()) {
            (true, true) => 0.0,
            (false, false) => verify::hausdorff(&scan.points, &curve),
            _ => f64::INFINITY,
        };
        r.max_residual = Some(dist);
        r.pass = dist <= r.tol;
    } else {
        // no reference curve: the scan is reported, not judged
        r.pass = true;
    }
    r.details = details;
    Ok(r)
}

/// Congruences between implicit surfaces that the catalog asserts.
pub const KNOWN_CONGRUENCES: [(ImplicitSurface, ImplicitSurface); 5] = {
    use ImplicitSurface::*;
    [(S4, S1p), (S4p, S1), (S3, S2p), (S3p, S2), (K4, S4)]
};

fn suite_congruence(cfg: &RunConfig) -> Result<Report> {
    let pairs = match (&cfg.implicit, &cfg.target) {
        (Some(a), Some(b)) => vec![(parse_implicit(a)?, parse_implicit(b)?)],
        (None, None) => KNOWN_CONGRUENCES.to_vec(),
        _ => return Err(ZmcError::Config("--implicit and --target go together".into())),
    };
    let window = cfg.window()?.unwrap_or(Window::square(1.5));
    let n = cfg.grid(14)?;
    let mut reports = Vec::new();
    let (mut worst, mut samples) = (0.0f64, 0);
    for (a, b) in pairs {
        let pts = verify::implicit_samples(a, window, n, 4.0);
        let rep = verify::find_isometry(a, b, &pts)?;
        worst = worst.max(rep.max_residual);
        samples += rep.samples;
        reports.push(rep);
    }
    let mut r = Report::new("congruence", cfg.tol.unwrap_or(1e-9))
        .count("pairs", reports.len())
        .count("samples", samples);
    r.pass = samples > 0 && worst <= r.tol;
    r.window = Some(window);
    r.grid = Some(n);
    r.max_residual = Some(worst);
    r.details = json!({ "congruences": reports });
    Ok(r)
}

fn suite_umbilic(cfg: &RunConfig) -> Result<Report> {
    let g = graph_for_suite(cfg)?;
    let window = cfg.window()?.unwrap_or(Window::new(-PI, PI, -2.0, 2.0));
    let n = cfg.grid(200)?;
    let u = verify::umbilic_scan(&g, window, n)?;
    // the tolerance is a floor here: no cell may come closer to umbilic
    let mut r = Report::new("umbilic", cfg.tol.unwrap_or(1e-3)).count("cells_used", u.cells_used);
    r.pass = u.cells_used > 0 && u.min_residual > r.tol;
    r.window = Some(window);
    r.grid = Some(n);
    r.details = json!({
        "graph": g.name,
        "min_residual": u.min_residual,
        "argmin_location": u.argmin_location,
        "min_discriminant": verify::UMBILIC_MIN_DISCRIMINANT,
    });
    Ok(r)
}

fn suite_identities(cfg: &RunConfig) -> Result<Report> {
    let n = cfg.grid(100)?;
    let rep = verify::identity_suite(n)?;
    let mut r = Report::new("identities", cfg.tol.unwrap_or(1e-9)).count("checks", rep.checks.len());
    r.pass = rep.max_error <= r.tol;
    r.window = Some(Window::square(3.0));
    r.grid = Some(n);
    r.max_residual = Some(rep.max_error);
    if let Some(c) = rep.checks.iter().max_by(|a, b| a.max_error.total_cmp(&b.max_error)) {
        r.argmax_location = c.argmax_location.map(|z| vec![z.re, z.im]);
    }
    r.details = json!({ "checks": rep.checks });
    Ok(r)
}

pub fn run_suite(suite: Suite, cfg: &RunConfig) -> Result<Report> {
    match suite {
        Suite::Zmc => suite_zmc(cfg),
        Suite::Membership => suite_membership(cfg),
        Suite::Census => suite_census(cfg),
        Suite::Singular => suite_singular(cfg),
        Suite::Congruence => suite_congruence(cfg),
        Suite::Umbilic => suite_umbilic(cfg),
        Suite::Identities => suite_identities(cfg),
    }
}

fn build_mesh(cfg: &RunConfig, target: &Target) -> Result<(Mesh, String, Option<ImplicitSurface>)> {
    Ok(match target {
        Target::Graph { graph, implicit } => {
            let w = cfg.window()?.unwrap_or_else(|| default_graph_window(graph));
            (Mesh::from_graph(graph, w, cfg.grid(200)?), graph.name.to_string(), *implicit)
        }
        Target::Patch { name, patch, implicit } => (Mesh::from_patch(patch, cfg.grid(100)?), name.clone(), *implicit),
    })
}

fn write_file(path: &Path, f: impl FnOnce(&mut io::BufWriter<fs::File>) -> io::Result<()>) -> Result<()> {
    let io_err = |e: io::Error| ZmcError::Io(format!("{}: {e}", path.display()));
    let file = fs::File::create(path).map_err(io_err)?;
    let mut w = io::BufWriter::new(file);
    f(&mut w).and_then(|_| w.flush()).map_err(io_err)
}

fn cmd_generate(cfg: &RunConfig) -> Result<Value> {
    let out = cfg
        .out
        .clone()
        .ok_or_else(|| ZmcError::Config("generate needs --out".into()))?;
    let format = match (&cfg.format, out.extension().and_then(|e| e.to_str())) {
        (Some(f), _) => parse_format(f)?,
        (None, Some(ext)) => parse_format(ext).unwrap_or(MeshFormat::Obj),
        (None, None) => MeshFormat::Obj,
    };
    let target = resolve_target(cfg, None)?;
    let (mesh, name, implicit) = build_mesh(cfg, &target)?;
    if mesh.vertices.is_empty() {
        return Err(ZmcError::DomainViolation(format!("no sample of `{name}` lies inside its region")));
    }
    write_file(&out, |w| mesh.write(format, w))?;
    let sidecar = if format == MeshFormat::Csv {
        None
    } else {
        let path = out.with_extension("csv");
        write_file(&path, |w| mesh.write_csv(w))?;
        Some(path)
    };
    let labels = mesh.label_counts();
    let membership = implicit.map(|s| {
        let pts: Vec<_> = mesh.vertices.iter().map(|v| v.point).collect();
        verify::membership_report(&pts, s)
    });
    Ok(json!({
        "surface": name,
        "grid": mesh.grid,
        "vertices": mesh.vertices.len(),
        "faces": mesh.faces.len(),
        "labels": {
            "spacelike": labels[0],
            "timelike": labels[1],
            "lightlike": labels[2],
            "unclassified": labels[3],
        },
        "mesh": out,
        "sidecar": sidecar,
        "membership": membership,
    }))
}

fn cmd_export(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<()> {
    let format = cfg.format.as_deref().unwrap_or("json");
    let text = match format {
        "json" => {
            let v = match (&cfg.surface, &cfg.graph) {
                (None, None) => json!({
                    "entries": catalog::list().iter().map(CatalogEntry::to_json).collect::<Vec<_>>(),
                    "implicit_surfaces": ImplicitSurface::ALL.iter().map(|s| s.to_json()).collect::<Vec<_>>(),
                }),
                (Some(n), None) | (None, Some(n)) => catalog::get(n)?.to_json(),
                (Some(_), Some(_)) => {
                    return Err(ZmcError::Config("give either --surface or --graph, not both".into()))
                }
            };
            to_json_string(&v).into_bytes()
        }
        "csv" => {
            let (mesh, _, _) = build_mesh(cfg, &resolve_target(cfg, None)?)?;
            let mut buf = Vec::new();
            mesh.write_csv(&mut buf).map_err(|e| ZmcError::Io(e.to_string()))?;
            buf
        }
        other => return Err(ZmcError::Config(format!("export writes json or csv, not `{other}`"))),
    };
    emit(cfg.out.as_deref(), &text, stdout)
}

fn emit(out: Option<&Path>, bytes: &[u8], stdout: &mut dyn Write) -> Result<()> {
    match out {
        Some(p) => fs::write(p, bytes).map_err(|e| ZmcError::Io(format!("{}: {e}", p.display()))),
        None => stdout.write_all(bytes).map_err(|e| ZmcError::Io(e.to_string())),
    }
}

/// Runs a parsed command line. `Ok(false)` means a verification check failed.
pub fn run(cli: &Cli, stdout: &mut dyn Write) -> Result<bool> {
    let mut cfg = match &cli.flags.config {
        Some(p) => RunConfig::load(p)?,
        None => RunConfig::default(),
    }
    .overridden_by(RunConfig::from_flags(&cli.flags)?);
    let command = match &cli.command {
        Command::Catalog { .. } => "catalog",
        Command::Generate => "generate",
        Command::Verify { .. } => "verify",
        Command::Export => "export",
    };
    cfg.command = Some(command.to_string());
    if let Command::Verify { suite: Some(s) } = &cli.command {
        cfg.suite = Some(*s);
    }
    let io_err = |e: io::Error| ZmcError::Io(e.to_string());
    if cli.flags.print_config {
        let v = serde_json::to_value(&cfg).expect("config serializes");
        stdout.write_all(to_json_string(&v).as_bytes()).map_err(io_err)?;
        return Ok(true);
    }
    match &cli.command {
        Command::Catalog { action } => {
            let v = match action {
                CatalogAction::List => catalog::list_json(),
                CatalogAction::Show { name } => catalog::get(name)?.to_json(),
            };
            stdout.write_all(to_json_string(&v).as_bytes()).map_err(io_err)?;
            Ok(true)
        }
        Command::Generate => {
            let v = cmd_generate(&cfg)?;
            stdout.write_all(to_json_string(&v).as_bytes()).map_err(io_err)?;
            Ok(true)
        }
        Command::Verify { .. } => {
            let suite = cfg
                .suite
                .ok_or_else(|| ZmcError::Config("verify needs a suite (or `suite` in the config file)".into()))?;
            let report = run_suite(suite, &cfg)?;
            let text = report.to_json();
            if let Some(p) = &cfg.out {
                fs::write(p, &text).map_err(|e| ZmcError::Io(format!("{}: {e}", p.display())))?;
            }
            stdout.write_all(text.as_bytes()).map_err(io_err)?;
            Ok(report.pass)
        }
        Command::Export => {
            cmd_export(&cfg, stdout)?;
            Ok(true)
        }
    }
}

/// Parses `args`, runs, and maps the outcome to the exit-code contract.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match run(&cli, &mut lock) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn windows_accept_multiples_of_pi() {
        let w = parse_window("-4pi,4pi,-6,6").unwrap();
        assert_eq!(w, [-4.0 * PI, 4.0 * PI, -6.0, 6.0]);
        assert_eq!(parse_window("-pi, pi/2, -2*pi, 0.5").unwrap(), [-PI, PI / 2.0, -2.0 * PI, 0.5]);
        assert!(parse_window("1,2,3").is_err());
        assert!(parse_window("a,2,3,4").is_err());
    }

    #[test]
    fn config_round_trips_and_flags_override() {
        let file = RunConfig {
            suite: Some(Suite::Census),
            graph: Some("graph_S1p".into()),
            grid: Some(100),
            window: Some([-1.0, 1.0, -2.0, 2.0]),
            ..RunConfig::default()
        };
        let text = serde_json::to_string(&file).unwrap();
        assert_eq!(serde_json::from_str::<RunConfig>(&text).unwrap(), file);
        let merged = file.clone().overridden_by(RunConfig {
            grid: Some(600),
            ..RunConfig::default()
        });
        assert_eq!(merged.grid, Some(600));
        assert_eq!(merged.graph.as_deref(), Some("graph_S1p"));
        assert!(serde_json::from_str::<RunConfig>(r#"{"gird": 3}"#).is_err());
    }

    #[test]
    fn family_names_pick_up_catalog_placements() {
        let cfg = RunConfig {
            surface: Some("scherk".into()),
            region: Some("dminus".into()),
            formula: Some("F1".into()),
            ..RunConfig::default()
        };
        match resolve_target(&cfg, None).unwrap() {
            Target::Patch { name, implicit, patch } => {
                assert_eq!(name, "scherk_S1p");
                assert_eq!(implicit, Some(ImplicitSurface::S1p));
                assert_eq!(patch.placement.scale, 2.0);
            }
            Target::Graph { .. } => panic!("expected a patch"),
        }
        let bad = RunConfig {
            surface: Some("enneper".into()),
            region: Some("dminus".into()),
            ..RunConfig::default()
        };
        assert!(matches!(resolve_target(&bad, None), Err(ZmcError::Config(_))));
    }
}
