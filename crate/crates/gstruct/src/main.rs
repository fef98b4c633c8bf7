use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use gstruct::schema::{
    Factored, GapRecord, Group, JamesRecord, KoRecord, MinKRecord, RealDimRecord, VerdictRecord, WeightRecord,
    WeylDimRecord,
};
use gstruct::{atlas, battery, render};
use gstruct_core::classify::{classify, min_source_rank, ClassifyError, ReductionVerdict};
use gstruct_core::enumerate::{enumerate_weights, EnumerateError, EnumerationRequest};
use gstruct_core::james::{self, JamesError, SphereFamily};
use gstruct_core::kocheck::{fixed_generator_exists, ko_group, KoGroup};
use gstruct_core::reality::{real_dim, RealityError};
use gstruct_core::weyl::{self, WeylError};
use gstruct_core::{AlgebraType, DominantWeight, GroupDescriptor, GroupFamily, LieFamily, ReductionQuery};
use num_bigint::BigUint;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "gstruct", version, about = "Structure-group reductions of bundles over spheres, and the invariants behind them")]
struct Cli {
    /// Output format; csv applies to `enumerate` and `atlas` only.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum JamesFn {
    A,
    B,
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum GapFn {
    J,
    J2,
    J4,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Generic,
    Specialized,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    A,
    B,
    C,
    D,
}

impl From<Algebra> for LieFamily {
    fn from(a: Algebra) -> Self {
        match a {
            Algebra::A => LieFamily::A,
            Algebra::B => LieFamily::B,
            Algebra::C => LieFamily::C,
            Algebra::D => LieFamily::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "SO")]
    So,
    #[value(name = "SU")]
    Su,
    #[value(name = "Sp")]
    Sp,
}

impl From<Family> for GroupFamily {
    fn from(f: Family) -> Self {
        match f {
            Family::So => GroupFamily::SO,
            Family::Su => GroupFamily::SU,
            Family::Sp => GroupFamily::Sp,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Battery {
    /// Minimum dimension of non-standard irreducibles, by enumeration
    Prop51,
    /// Minimum dimension of irreducibles outside the exterior-power ring
    Prop53,
    /// Total Stiefel-Whitney class for Sp(3) in SO(15)
    LemmaSp3,
    /// psi^3 fixed generators and the SO classifier against j(n)
    EquivSweep,
}

#[derive(Subcommand)]
enum Command {
    /// Hurwitz-Radon number a(r) or James number b(r), c(r).
    James {
        #[arg(value_enum, ignore_case = true)]
        function: JamesFn,
        r: u64,
    },
    /// Gap function j(n), j2(n) or j4(n).
    Gap {
        #[arg(value_enum, ignore_case = true)]
        function: GapFn,
        n: u64,
    },
    /// Complex dimension of an irreducible representation.
    WeylDim {
        #[arg(value_enum, ignore_case = true)]
        algebra: Algebra,
        rank: usize,
        /// Coefficients m1,...,ml of the dominant weight.
        weight: String,
        #[arg(long, value_enum, default_value_t = Method::Generic)]
        method: Method,
    },
    /// Reality type and real dimension of an irreducible representation.
    RealDim {
        #[arg(value_enum, ignore_case = true)]
        family: Family,
        k: u64,
        weight: String,
    },
    /// All dominant weights up to a complex dimension.
    Enumerate {
        #[arg(value_enum, ignore_case = true)]
        algebra: Algebra,
        rank: usize,
        #[arg(long)]
        max_dim: BigUint,
        /// Keep only weights that are representations of this group.
        #[arg(long, value_enum, ignore_case = true)]
        filter: Option<Family>,
    },
    /// Whether the structure group reduces from the target to the source.
    Classify {
        #[arg(long, value_enum, ignore_case = true)]
        target: Family,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, ignore_case = true)]
        source: Family,
        #[arg(long)]
        k: u64,
    },
    /// Least source rank admitting a reduction.
    MinK {
        #[arg(long, value_enum, ignore_case = true)]
        target: Family,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, ignore_case = true)]
        source: Family,
    },
    /// Connective KO group of P^inf/P^k in degree n and the psi^3 criterion.
    KoCheck {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Run a verification battery.
    Verify {
        #[arg(value_enum)]
        battery: Battery,
    },
    /// Least source rank for every n in a range.
    Atlas {
        #[arg(long, value_enum, ignore_case = true)]
        target: Family,
        /// Inclusive range `a..b`.
        #[arg(long)]
        n_range: String,
        #[arg(long, value_enum, ignore_case = true)]
        source: Family,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
    Verification(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verification(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Verification(m) => m,
        }
    }
}

impl From<JamesError> for Failure {
    fn from(e: JamesError) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<WeylError> for Failure {
    fn from(e: WeylError) -> Self {
        match e {
            WeylError::WrongLength { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<RealityError> for Failure {
    fn from(e: RealityError) -> Self {
        match e {
            RealityError::Weyl(w) => w.into(),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

impl From<ClassifyError> for Failure {
    fn from(e: ClassifyError) -> Self {
        Failure::Domain(format!("{e} (hypothesis {})", e.hypothesis()))
    }
}

impl From<EnumerateError> for Failure {
    fn from(e: EnumerateError) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("records serialize");
    s.push('\n');
    s
}

fn weight(algebra: AlgebraType, s: &str) -> Result<DominantWeight, Failure> {
    let coeffs = gstruct::parse_weight(s).map_err(|e| Failure::Usage(format!("bad weight {s:?}: {e}")))?;
    Ok(DominantWeight::new(algebra, coeffs)?)
}

fn no_csv(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage("csv output is available for enumerate and atlas only".into()));
    }
    Ok(())
}

fn run_james(format: Format, function: JamesFn, r: u64) -> Outcome {
    no_csv(format)?;
    let (name, value) = match function {
        JamesFn::A => ("a", james::hurwitz_radon_a(r)?),
        JamesFn::B => ("b", james::james_b(r)?),
        JamesFn::C => ("c", james::james_c(r)?),
    };
    Ok(match format {
        Format::Json => json(&JamesRecord { function: name.into(), r, value: Factored::from(&value) }),
        _ => format!("{}\n", render::factored(&value)),
    })
}

fn run_gap(format: Format, function: GapFn, n: u64) -> Outcome {
    no_csv(format)?;
    let (name, value) = match function {
        GapFn::J => ("j", james::j_real(n)?),
        GapFn::J2 => ("j2", james::j_gap(n, SphereFamily::Complex)?),
        GapFn::J4 => ("j4", james::j_gap(n, SphereFamily::Quaternionic)?),
    };
    Ok(match format {
        Format::Json => json(&GapRecord { function: name.into(), n, value }),
        _ => format!("{value}\n"),
    })
}

fn run_weyl_dim(format: Format, algebra: Algebra, rank: usize, w: &str, method: Method) -> Outcome {
    no_csv(format)?;
    let alg = AlgebraType::new(algebra.into(), rank)?;
    let w = weight(alg, w)?;
    let generic = match method {
        Method::Generic | Method::Both => Some(weyl::dim_generic(&w)?),
        Method::Specialized => None,
    };
    let specialized = match method {
        Method::Specialized | Method::Both => Some(weyl::dim_specialized(&w)?),
        Method::Generic => None,
    };
    let text = match format {
        Format::Json => json(&WeylDimRecord {
            algebra: format!("{}{}", alg.family(), alg.rank()),
            weight: w.coeffs().to_vec(),
            generic: generic.as_ref().map(|d| d.to_str_radix(10)),
            specialized: specialized.as_ref().map(|d| d.to_str_radix(10)),
        }),
        _ => {
            let parts: Vec<String> = [&generic, &specialized].into_iter().flatten().map(|d| d.to_str_radix(10)).collect();
            format!("{}\n", parts.join(" "))
        }
    };
    if let (Some(g), Some(s)) = (&generic, &specialized) {
        if g != s {
            return Err(Failure::Verification(format!("{text}generic {g} and specialized {s} disagree")));
        }
    }
    Ok(text)
}

fn run_real_dim(format: Format, family: Family, k: u64, w: &str) -> Outcome {
    no_csv(format)?;
    let g = GroupDescriptor { family: family.into(), size: k };
    let w = weight(g.algebra()?, w)?;
    let info = real_dim(&g, &w)?;
    Ok(match format {
        Format::Json => json(&RealDimRecord::new(&g, &info)),
        _ => {
            let flag = if info.real_dim_is_lower_bound { "lower-bound" } else { "exact" };
            format!("{} {} {flag}\n", info.real_dim, info.reality.as_str())
        }
    })
}

fn run_enumerate(format: Format, algebra: Algebra, rank: usize, max_dim: BigUint, filter: Option<Family>) -> Outcome {
    let cap = gstruct::parse_cap(std::env::var(gstruct::CAP_VAR).ok().as_deref())
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let alg = AlgebraType::new(algebra.into(), rank)?;
    let mut req = EnumerationRequest::new(alg, max_dim).with_cap(cap);
    if let Some(f) = filter {
        req = req.with_filter(f.into());
    }
    let rows = enumerate_weights(&req)?;
    Ok(match format {
        Format::Json => {
            let records: Vec<WeightRecord> = rows.iter().map(|(w, d)| WeightRecord::new(w, d)).collect();
            json(&records)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec![String::from("dim")];
            header.extend((1..=rank).map(|i| format!("m{i}")));
            w.write_record(&header).expect("in-memory write");
            for (weight, d) in &rows {
                let mut record = vec![d.to_str_radix(10)];
                record.extend(weight.coeffs().iter().map(u32::to_string));
                w.write_record(&record).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("ascii")
        }
        Format::Human => {
            let mut out = String::new();
            for (weight, d) in &rows {
                writeln!(out, "{d:>8}  {}", weight.label()).unwrap();
            }
            out
        }
    })
}

fn human_verdict(v: &ReductionVerdict) -> String {
    let q = &v.query;
    let mut out = String::new();
    let answer = if v.reducible { "YES" } else { "NO" };
    match v.case {
        Some(c) => writeln!(out, "{} <- {}: {answer} (case {c}, {})", q.target, q.source, v.reason.as_str()),
        None => writeln!(out, "{} <- {}: {answer} ({})", q.target, q.source, v.reason.as_str()),
    }
    .unwrap();
    if let Some(t) = &v.trace {
        writeln!(out, "m = {}, d = {}, modulus {}, remainder {}", t.m, t.d, render::factored(&t.modulus), t.remainder).unwrap();
    }
    for h in &v.homs {
        let parts: Vec<String> =
            h.summands.iter().map(|s| format!("{} {} {} x{}", s.irrep, s.form.as_str(), s.dim, s.multiplicity)).collect();
        writeln!(out, "{}: {}", h.kind.as_str(), parts.join(" + ")).unwrap();
    }
    out
}

fn run_classify(format: Format, target: Family, n: u64, source: Family, k: u64) -> Outcome {
    no_csv(format)?;
    let q = ReductionQuery::new(
        GroupDescriptor { family: target.into(), size: n },
        GroupDescriptor { family: source.into(), size: k },
    );
    let v = classify(&q)?;
    Ok(match format {
        Format::Json => json(&VerdictRecord::from(&v)),
        _ => human_verdict(&v),
    })
}

fn run_min_k(format: Format, target: Family, n: u64, source: Family) -> Outcome {
    no_csv(format)?;
    let g = GroupDescriptor { family: target.into(), size: n };
    let source: GroupFamily = source.into();
    let min_k = min_source_rank(&g, source)?;
    Ok(match format {
        Format::Json => json(&MinKRecord { target: Group::from(&g), source_family: source.as_str().into(), min_k }),
        _ => match min_k {
            Some(k) => format!("{k}\n"),
            None => "none\n".into(),
        },
    })
}

fn run_ko_check(format: Format, n: u64, k: u64) -> Outcome {
    no_csv(format)?;
    let domain = |e: gstruct_core::kocheck::KoError| Failure::Domain(e.to_string());
    let info = ko_group(n, k).map_err(domain)?;
    let fixed = fixed_generator_exists(n, k).map_err(domain)?;
    Ok(match format {
        Format::Json => json(&KoRecord::new(&info, fixed)),
        _ => {
            let group = match &info.group {
                KoGroup::Cyclic { order, psi3_exponent } => format!(
                    "cyclic of order {order}, psi^3 acts as 3^{psi3_exponent} = {}",
                    render::magnitude(&info.psi3_multiplier().expect("cyclic"))
                ),
                KoGroup::ZeroProjection => "Z/2 with zero projection to the top cell".into(),
                KoGroup::NotComputed => "not computed for this (n, k)".into(),
            };
            format!("n = {n}, k = {k}: {group}\nfixed generator: {}\n", if fixed { "yes" } else { "no" })
        }
    })
}

fn run_verify(format: Format, b: Battery) -> Outcome {
    no_csv(format)?;
    let report = match b {
        Battery::Prop51 => battery::nonstandard(),
        Battery::Prop53 => battery::nonexterior(),
        Battery::LemmaSp3 => battery::lemma_sp3(),
        Battery::EquivSweep => battery::equivalence_sweep(),
    };
    let text = match format {
        Format::Json => json(&serde_json::json!({ "passed": report.passed(), "lines": report.lines })),
        _ => report.lines.iter().map(|l| format!("{l}\n")).collect(),
    };
    if report.passed() {
        Ok(text)
    } else {
        Err(Failure::Verification(format!("{text}{} check(s) failed", report.failures)))
    }
}

fn run_atlas(format: Format, target: Family, range: &str, source: Family) -> Outcome {
    let range = gstruct::parse_range(range).ok_or_else(|| Failure::Usage(format!("bad range {range:?}, expected a..b")))?;
    let rows = atlas::rows(target.into(), range, source.into());
    Ok(match format {
        Format::Csv => {
            let mut buf = Vec::new();
            atlas::write_csv(&mut buf, &rows).map_err(|e| Failure::Usage(e.to_string()))?;
            String::from_utf8(buf).expect("ascii")
        }
        Format::Json => json(&rows),
        Format::Human => {
            let mut out = String::new();
            for r in &rows {
                let k = r.min_k.map(|k| k.to_string()).unwrap_or_else(|| "-".into());
                writeln!(out, "{:>5}  {:<8} {:<3} {:<2} {:<8} {}", r.n, r.target, r.source, k, r.modulus, r.status).unwrap();
            }
            out
        }
    })
}

fn run(cli: Cli) -> Outcome {
    let f = cli.format;
    match cli.command {
        Command::James { function, r } => run_james(f, function, r),
        Command::Gap { function, n } => run_gap(f, function, n),
        Command::WeylDim { algebra, rank, weight, method } => run_weyl_dim(f, algebra, rank, &weight, method),
        Command::RealDim { family, k, weight } => run_real_dim(f, family, k, &weight),
        Command::Enumerate { algebra, rank, max_dim, filter } => run_enumerate(f, algebra, rank, max_dim, filter),
        Command::Classify { target, n, source, k } => run_classify(f, target, n, source, k),
        Command::MinK { target, n, source } => run_min_k(f, target, n, source),
        Command::KoCheck { n, k } => run_ko_check(f, n, k),
        Command::Verify { battery } => run_verify(f, battery),
        Command::Atlas { target, n_range, source } => run_atlas(f, target, &n_range, source),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            std::io::stdout().flush().ok();
            ExitCode::SUCCESS
        }
        Err(failure) => {
            let msg = failure.message();
            if let Failure::Verification(_) = failure {
                // The report itself goes to stdout; the summary to stderr.
                if let Some((report, summary)) = msg.rsplit_once('\n') {
                    println!("{report}");
                    eprintln!("error: {summary}");
                } else {
                    eprintln!("error: {msg}");
                }
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(failure.code())
        }
    }
}
