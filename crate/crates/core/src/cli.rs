//! Command-line front end and the JSON orbit file format.

use std::ops::RangeInclusive;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::chevalley::{LieAlgebra, LieElement};
use crate::error::{Error, Result};
use crate::grading::{KacDiagram, ThetaGrading};
use crate::linalg::{fmt_q, parse_q, Q};
use crate::method1::{self, fmt_vec, OrbitRecord, SearchConfig};
use crate::nullcone::{self, Method, NullconeSummary};
use crate::pisys;
use crate::rootsys::{RootSystem, SimpleType};
use crate::weyl;

pub const THREADS_ENV: &str = "THETA_ORBITS_THREADS";
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "theta-orbits", version, about = "Nilpotent orbits of θ-groups")]
pub struct Cli {
    /// Worker threads (0 = all cores).
    #[arg(long, global = true, env = THREADS_ENV, default_value_t = 0)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Roots, Cartan matrix and marks.
    Roots(TypeArg),
    /// Minimal coset representatives of the Weyl group of a subsystem.
    Cosets(CosetArgs),
    /// Classes of π-systems up to Weyl group conjugacy.
    Pisystems(PiArgs),
    /// Nilpotent orbits of one grading.
    Orbits(OrbitArgs),
    /// N-regular inner automorphisms over a range of orders.
    Nregular(NregularArgs),
    /// Weighted Dynkin diagrams of the nilpotent orbits of g.
    Wdd(TypeArg),
}

#[derive(Args, Debug)]
pub struct TypeArg {
    /// Simple type, e.g. E8.
    #[arg(long = "type")]
    pub ty: SimpleType,
}

#[derive(Args, Debug)]
pub struct CosetArgs {
    #[arg(long = "type")]
    pub ty: SimpleType,
    /// Subsystem: the extended Dynkin diagram minus this node.
    #[arg(long, conflicts_with = "simple")]
    pub subsystem_from_extended_minus: Option<usize>,
    /// Subsystem: these simple roots (1-based, comma separated).
    #[arg(long, value_delimiter = ',')]
    pub simple: Option<Vec<usize>>,
    /// Print a reduced word for each representative.
    #[arg(long)]
    pub words: bool,
}

#[derive(Args, Debug)]
pub struct PiArgs {
    #[arg(long = "type")]
    pub ty: SimpleType,
    /// Only maximal π-systems.
    #[arg(long)]
    pub maximal: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    #[value(name = "1")]
    One,
    #[value(name = "2")]
    Two,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Auto => Method::Auto,
            MethodArg::One => Method::One,
            MethodArg::Two => Method::Two,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
    pub method: MethodArg,
    #[arg(long, default_value_t = SearchConfig::default().seed)]
    pub seed: u64,
    #[arg(long, default_value_t = SearchConfig::default().omega_cap)]
    pub omega_cap: u64,
}

impl SearchArgs {
    fn config(&self) -> SearchConfig {
        SearchConfig {
            seed: self.seed,
            omega_cap: self.omega_cap,
        }
    }
}

#[derive(Args, Debug)]
pub struct OrbitArgs {
    #[arg(long = "type")]
    pub ty: SimpleType,
    /// Kac labels s0,s1,...,sl (node 0 is the affine node).
    #[arg(long, required_unless_present = "nregular_order", conflicts_with = "nregular_order")]
    pub kac: Option<KacDiagram>,
    /// Use the N-regular automorphism of this order.
    #[arg(long)]
    pub nregular_order: Option<u32>,
    #[command(flatten)]
    pub search: SearchArgs,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
}

#[derive(Args, Debug)]
pub struct NregularArgs {
    #[arg(long = "type")]
    pub ty: SimpleType,
    /// Orders, `a..b` or a single order.
    #[arg(long, value_parser = parse_range)]
    pub orders: RangeInclusive<u32>,
    #[command(flatten)]
    pub search: SearchArgs,
}

fn parse_range(s: &str) -> std::result::Result<RangeInclusive<u32>, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad order {t:?}: {e}"));
    let r = match s.split_once("..") {
        Some((a, b)) => num(a)?..=num(b.trim_start_matches('='))?,
        None => num(s)?..=num(s)?,
    };
    if *r.start() < 1 || r.start() > r.end() {
        return Err(format!("empty order range {s:?}"));
    }
    Ok(r)
}

/// Serialized form of an orbit computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitFile {
    pub algebra: AlgebraJson,
    pub kac: Vec<u32>,
    pub m: u32,
    pub records: Vec<RecordJson>,
    pub summary: NullconeSummary,
    pub seed: u64,
    pub schema: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraJson {
    #[serde(rename = "type")]
    pub ty: String,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecordJson {
    pub h: Vec<String>,
    /// `[basis label, coefficient]` pairs.
    pub e: Vec<(String, String)>,
    pub f: Vec<(String, String)>,
    pub dim: usize,
    pub wdd: Vec<u8>,
}

fn element_json(alg: &LieAlgebra, x: &LieElement) -> Vec<(String, String)> {
    x.terms().map(|(b, c)| (alg.basis_label(b), fmt_q(c))).collect()
}

fn element_from_json(alg: &LieAlgebra, terms: &[(String, String)]) -> Result<LieElement> {
    let mut x = alg.zero();
    for (label, c) in terms {
        let b = alg
            .parse_label(label)
            .ok_or_else(|| Error::Parse(format!("unknown basis element {label:?}")))?;
        x.coeffs[b] = parse_q(c).ok_or_else(|| Error::Parse(format!("bad rational {c:?}")))?;
    }
    Ok(x)
}

impl OrbitFile {
    pub fn new(gr: &ThetaGrading, records: &[OrbitRecord], seed: u64) -> Self {
        let alg = gr.algebra();
        let t = alg.root_system().simple_type();
        OrbitFile {
            algebra: AlgebraJson {
                ty: t.to_string(),
                rank: t.rank,
            },
            kac: gr.kac().map(|k| k.labels.clone()).unwrap_or_default(),
            m: gr.order(),
            records: records
                .iter()
                .map(|r| RecordJson {
                    h: r.h.iter().map(fmt_q).collect(),
                    e: element_json(alg, &r.e),
                    f: element_json(alg, &r.f),
                    dim: r.dim,
                    wdd: r.wdd.clone(),
                })
                .collect(),
            summary: nullcone::summarize(gr, records),
            seed,
            schema: SCHEMA_VERSION,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable") + "\n"
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: OrbitFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if f.schema != SCHEMA_VERSION {
            return Err(Error::Parse(format!("unsupported schema {}", f.schema)));
        }
        Ok(f)
    }

    /// Rebuilds the orbit records in the algebra they were computed in.
    pub fn orbit_records(&self, alg: &LieAlgebra) -> Result<Vec<OrbitRecord>> {
        self.records
            .iter()
            .map(|r| {
                Ok(OrbitRecord {
                    h: r
                        .h
                        .iter()
                        .map(|c| parse_q(c).ok_or_else(|| Error::Parse(format!("bad rational {c:?}"))))
                        .collect::<Result<Vec<Q>>>()?,
                    e: element_from_json(alg, &r.e)?,
                    f: element_from_json(alg, &r.f)?,
                    dim: r.dim,
                    wdd: r.wdd.clone(),
                })
            })
            .collect()
    }
}

fn algebra(t: SimpleType) -> Arc<LieAlgebra> {
    Arc::new(LieAlgebra::new(Arc::new(RootSystem::new(t))))
}

fn fmt_wdd(d: &[u8]) -> String {
    d.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("")
}

fn summary_line(s: &NullconeSummary) -> String {
    format!(
        "orbits {} components {} dim {} rank {}",
        s.orbit_count,
        s.components_label(),
        s.component_dim,
        s.rank
    )
}

pub fn cmd_roots(a: &TypeArg) -> Result<String> {
    Ok(RootSystem::new(a.ty).dump())
}

pub fn cmd_cosets(a: &CosetArgs) -> Result<String> {
    let rs = RootSystem::new(a.ty);
    let l = rs.rank();
    let gens: Vec<usize> = match (&a.subsystem_from_extended_minus, &a.simple) {
        (Some(k), _) => {
            if *k > l {
                return Err(Error::Precondition(format!("node {k} not in the extended diagram of {}", a.ty)));
            }
            let mut g: Vec<usize> = (0..l).filter(|&i| i + 1 != *k).map(|i| rs.simple(i)).collect();
            if *k != 0 {
                g.push(rs.lowest_root());
            }
            g
        }
        (None, Some(s)) => s
            .iter()
            .map(|&i| {
                if (1..=l).contains(&i) {
                    Ok(rs.simple(i - 1))
                } else {
                    Err(Error::Precondition(format!("no simple root {i} in {}", a.ty)))
                }
            })
            .collect::<Result<_>>()?,
        (None, None) => Vec::new(),
    };
    let basis = rs.positive_basis(&gens);
    let reps = weyl::coset_representatives(&rs, &basis);
    let mut out = format!("subsystem {}\n{}\n", rs.dynkin_type(&basis), reps.len());
    if a.words {
        for w in &reps {
            out.push_str(&w.word_string());
            out.push('\n');
        }
    }
    Ok(out)
}

pub fn cmd_pisystems(a: &PiArgs) -> Result<String> {
    let rs = RootSystem::new(a.ty);
    let (classes, what) = if a.maximal {
        (pisys::classify_maximal(&rs), "maximal classes")
    } else {
        // the empty system is not listed
        let mut c = pisys::classify_all(&rs);
        c.retain(|g| !g.is_empty());
        (c, "classes")
    };
    let mut out = format!("{} {}\n", classes.len(), what);
    for g in &classes {
        out.push_str(&rs.dynkin_type(g));
        out.push('\n');
    }
    Ok(out)
}

pub fn cmd_orbits(a: &OrbitArgs) -> Result<String> {
    let alg = algebra(a.ty);
    let cfg = a.search.config();
    let (gr, records) = match (&a.kac, a.nregular_order) {
        (Some(k), _) => {
            let gr = ThetaGrading::from_kac(Arc::clone(&alg), k)?;
            let recs = nullcone::classify(&gr, a.search.method.into(), &cfg)?;
            (gr, recs)
        }
        (None, Some(m)) => {
            let hit = nullcone::nregular_survey(&alg, m, a.search.method.into(), &cfg)?;
            (ThetaGrading::from_kac(Arc::clone(&alg), &hit.kac)?, hit.records)
        }
        (None, None) => return Err(Error::Precondition("one of --kac, --nregular-order is required".into())),
    };
    let file = OrbitFile::new(&gr, &records, cfg.seed);
    if a.output == Output::Json {
        return Ok(file.to_json());
    }
    let dims = gr.dims();
    let mut out = format!(
        "{} kac {} m {} g0 {} dims {}\n",
        a.ty,
        gr.kac().map(|k| k.to_string()).unwrap_or_default(),
        gr.order(),
        gr.g0_type(),
        dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("/")
    );
    for (i, r) in records.iter().enumerate() {
        out.push_str(&format!(
            "{i:>4}  h={}  dim {}  wdd {}  e={}\n",
            fmt_vec(&r.h),
            r.dim,
            fmt_wdd(&r.wdd),
            alg.format_element(&r.e)
        ));
    }
    out.push_str(&summary_line(&file.summary));
    out.push('\n');
    Ok(out)
}

pub fn cmd_nregular(a: &NregularArgs) -> Result<String> {
    let alg = algebra(a.ty);
    let cfg = a.search.config();
    let mut out = String::from("order  kac  orbits  components  dim  rank\n");
    for m in a.orders.clone() {
        let hit = nullcone::nregular_survey(&alg, m, a.search.method.into(), &cfg)?;
        let s = &hit.summary;
        out.push_str(&format!(
            "{m}  {}  {}  {}  {}  {}\n",
            hit.kac,
            s.orbit_count,
            s.components_label(),
            s.component_dim,
            s.rank
        ));
    }
    Ok(out)
}

pub fn cmd_wdd(a: &TypeArg) -> Result<String> {
    let alg = algebra(a.ty);
    let chars = method1::classify_nilpotent_g(&alg, &SearchConfig::default())?;
    let mut out = format!("{} nilpotent orbits\n", chars.len());
    for c in chars.iter() {
        out.push_str(&fmt_wdd(&c.wdd));
        out.push('\n');
    }
    Ok(out)
}

/// Runs a parsed command line, returning the text to print.
pub fn run(cli: &Cli) -> Result<String> {
    if cli.threads > 0 {
        // a second initialization in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.threads)
            .build_global();
    }
    match &cli.command {
        Command::Roots(a) => cmd_roots(a),
        Command::Cosets(a) => cmd_cosets(a),
        Command::Pisystems(a) => cmd_pisystems(a),
        Command::Orbits(a) => cmd_orbits(a),
        Command::Nregular(a) => cmd_nregular(a),
        Command::Wdd(a) => cmd_wdd(a),
    }
}

/// Parses and runs `args` (program name first).
pub fn run_args<I, T>(args: I) -> Result<String>
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = Cli::try_parse_from(args).map_err(|e| Error::Parse(e.to_string()))?;
    run(&cli)
}
