use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use qrook_core::ffmat;
use qrook_core::permstat::{self, Word};
use qrook_core::placements::{hit_polys, rook_poly, rook_polys};
use qrook_core::verify::{self, run_suite, step_formulas};
use qrook_core::{BoardSpec, Family, HitMethod, LaurentPoly, StepMethod, Suite};

#[derive(Parser)]
#[command(
    name = "qrook",
    version,
    about = "q-rook and q-hit polynomials of Ferrers boards"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// q-rook polynomials R_k
    Rook {
        /// heights:0,1,2 | steps:1x1,1x1 | tri:N | stair:N | gv:2,1
        #[arg(long)]
        board: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// q-hit polynomials T_k, by one method or all of them
    Hit {
        #[arg(long)]
        board: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// A statistic of a word or permutation
    Stats {
        /// digits (2313212) or comma-separated letters
        #[arg(long)]
        word: String,
        /// letter multiplicities, overriding the ones read off the word
        #[arg(long)]
        v: Option<String>,
        #[arg(long, value_enum)]
        stat: StatArg,
        #[arg(long, value_enum, default_value_t = FamilyArg::Mat)]
        family: FamilyArg,
        /// any of the eight descent-graph variants; overrides stat1..stat4
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=8))]
        variant: Option<u8>,
        /// leave the reflected variant without the n·des - C(n,2) shift
        #[arg(long)]
        unshifted: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Brute-force rank counts of board-supported matrices over F_p
    Matrices {
        #[arg(long)]
        board: String,
        #[arg(long)]
        prime: u64,
        #[arg(long, default_value_t = ffmat::DEFAULT_BUDGET)]
        budget: u128,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run identity and unimodality checks
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
    },
    /// The eight statistics of one family on every permutation of S_n
    Table {
        #[arg(long, value_enum, default_value_t = FamilyArg::Mat)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Mat,
    Xi,
    Defining,
    Eq24,
    Eq26,
    All,
}

impl MethodArg {
    const EACH: [MethodArg; 5] = [
        MethodArg::Mat,
        MethodArg::Xi,
        MethodArg::Defining,
        MethodArg::Eq24,
        MethodArg::Eq26,
    ];

    fn name(self) -> &'static str {
        match self {
            MethodArg::Mat => "mat",
            MethodArg::Xi => "xi",
            MethodArg::Defining => "defining",
            MethodArg::Eq24 => "eq24",
            MethodArg::Eq26 => "eq26",
            MethodArg::All => "all",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Mat,
    Xi,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Mat => Family::Mat,
            FamilyArg::Xi => Family::Xi,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    Des,
    Maj,
    Exc,
    Den,
    Stat1,
    Stat2,
    Stat3,
    Stat4,
    Stat5,
    Stat6,
    Stat7,
    Theorem5Stat,
    Theorem5Statx,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Rook,
    Hit,
    Mahonian,
    Euler,
    Reciprocity,
    Ffmat,
    Unimodal,
    Steps,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::All => Suite::All,
            SuiteArg::Rook => Suite::Rook,
            SuiteArg::Hit => Suite::Hit,
            SuiteArg::Mahonian => Suite::Mahonian,
            SuiteArg::Euler => Suite::Euler,
            SuiteArg::Reciprocity => Suite::Reciprocity,
            SuiteArg::Ffmat => Suite::Ffmat,
            SuiteArg::Unimodal => Suite::Unimodal,
            SuiteArg::Steps => Suite::Steps,
        }
    }
}

/// Either everything checked out, or a verification reported a failure.
enum Outcome {
    Ok,
    VerificationFailed,
}

fn parse_board(spec: &str) -> anyhow::Result<BoardSpec> {
    spec.parse()
        .with_context(|| format!("bad board spec {spec:?}"))
}

fn poly_csv(out: &mut dyn Write, prefix: Option<usize>, f: &LaurentPoly) -> io::Result<()> {
    for (e, c) in f.terms() {
        match prefix {
            Some(k) => writeln!(out, "{k},{e},{c}")?,
            None => writeln!(out, "{e},{c}")?,
        }
    }
    Ok(())
}

/// One polynomial, or the whole list indexed by `k`.
fn emit_polys(
    out: &mut dyn Write,
    name: &str,
    polys: &[LaurentPoly],
    k: Option<usize>,
    format: Format,
) -> anyhow::Result<()> {
    match (k, format) {
        (Some(k), Format::Json) => writeln!(out, "{}", serde_json::to_string(&polys[k])?)?,
        (None, Format::Json) => writeln!(out, "{}", serde_json::to_string(polys)?)?,
        (Some(k), Format::Csv) => {
            writeln!(out, "exponent,coefficient")?;
            poly_csv(out, None, &polys[k])?;
        }
        (None, Format::Csv) => {
            writeln!(out, "k,exponent,coefficient")?;
            for (k, f) in polys.iter().enumerate() {
                poly_csv(out, Some(k), f)?;
            }
        }
        (Some(k), Format::Text) => writeln!(out, "{}", polys[k])?,
        (None, Format::Text) => {
            for (k, f) in polys.iter().enumerate() {
                writeln!(out, "{name}_{k} = {f}")?;
            }
        }
    }
    Ok(())
}

/// `R_k` or `T_k` at an index past the last column is the zero polynomial.
fn padded(mut polys: Vec<LaurentPoly>, k: Option<usize>) -> Vec<LaurentPoly> {
    if let Some(k) = k {
        if k >= polys.len() {
            polys.resize(k + 1, LaurentPoly::zero());
        }
    }
    polys
}

fn hit_by(spec: &BoardSpec, method: MethodArg) -> anyhow::Result<Vec<LaurentPoly>> {
    let board = spec.board();
    Ok(match method {
        MethodArg::Mat => hit_polys(&board, HitMethod::Mat)?,
        MethodArg::Xi => hit_polys(&board, HitMethod::Xi)?,
        MethodArg::Defining => hit_polys(&board, HitMethod::Defining)?,
        MethodArg::Eq24 => step_formulas(&spec.steps(), StepMethod::Eq24),
        MethodArg::Eq26 => step_formulas(&spec.steps(), StepMethod::Eq26),
        MethodArg::All => unreachable!("expanded by the caller"),
    })
}

fn cmd_hit(
    out: &mut dyn Write,
    spec: &BoardSpec,
    k: Option<usize>,
    method: MethodArg,
    format: Format,
) -> anyhow::Result<Outcome> {
    if method != MethodArg::All {
        emit_polys(out, "T", &padded(hit_by(spec, method)?, k), k, format)?;
        return Ok(Outcome::Ok);
    }
    let admissible = spec.board().is_admissible();
    let mut results = Vec::new();
    for m in MethodArg::EACH {
        if admissible || !matches!(m, MethodArg::Mat | MethodArg::Xi) {
            results.push((m, padded(hit_by(spec, m)?, k)));
        }
    }
    let pick = |polys: &Vec<LaurentPoly>| match k {
        Some(k) => polys[k..=k].to_vec(),
        None => polys.clone(),
    };
    let consistent = results.windows(2).all(|w| pick(&w[0].1) == pick(&w[1].1));
    let verdict = if consistent {
        "CONSISTENT"
    } else {
        "INCONSISTENT"
    };
    match format {
        Format::Json => {
            let methods: serde_json::Map<_, _> = results
                .iter()
                .map(|(m, p)| Ok((m.name().to_string(), serde_json::to_value(pick(p))?)))
                .collect::<anyhow::Result<_>>()?;
            let v = json!({ "k": k, "methods": methods, "consistent": consistent });
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
        }
        Format::Csv => {
            writeln!(out, "method,k,exponent,coefficient")?;
            for (m, polys) in &results {
                for (idx, f) in pick(polys).iter().enumerate() {
                    for (e, c) in f.terms() {
                        writeln!(out, "{},{},{e},{c}", m.name(), k.unwrap_or(idx))?;
                    }
                }
            }
            writeln!(out, "{verdict}")?;
        }
        Format::Text => {
            for (m, polys) in &results {
                for (idx, f) in pick(polys).iter().enumerate() {
                    writeln!(out, "{} T_{} = {f}", m.name(), k.unwrap_or(idx))?;
                }
            }
            writeln!(out, "{verdict}")?;
        }
    }
    Ok(if consistent {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    })
}

fn parse_word(word: &str, v: Option<&str>) -> anyhow::Result<Word> {
    let w: Word = word
        .parse()
        .with_context(|| format!("malformed word {word:?}"))?;
    let Some(v) = v else {
        return Ok(w);
    };
    let v = v
        .split(',')
        .map(|x| x.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("malformed multiplicities {v:?}"))?;
    Ok(Word::new(w.letters().to_vec(), v)?)
}

fn stat_value(
    w: &Word,
    stat: StatArg,
    family: Family,
    variant: Option<u8>,
    unshifted: bool,
) -> anyhow::Result<i64> {
    let fam = |v: u8| permstat::stat_family_with(w, family, variant.unwrap_or(v), !unshifted);
    Ok(match stat {
        StatArg::Des => permstat::des(w) as i64,
        StatArg::Maj => permstat::maj(w) as i64,
        StatArg::Exc => permstat::exc(w) as i64,
        StatArg::Den => permstat::den(w)? as i64,
        StatArg::Stat1 => fam(1)?,
        StatArg::Stat2 => fam(2)?,
        StatArg::Stat3 => fam(3)?,
        StatArg::Stat4 => fam(4)?,
        StatArg::Stat5 => permstat::stat5(w)?,
        StatArg::Stat6 => permstat::stat6(w)?,
        StatArg::Stat7 => permstat::stat7(w)?,
        StatArg::Theorem5Stat => permstat::theorem5_stat(w)?,
        StatArg::Theorem5Statx => permstat::theorem5_statx(w),
    })
}

fn cmd_matrices(
    out: &mut dyn Write,
    spec: &BoardSpec,
    p: u64,
    budget: u128,
    format: Format,
) -> anyhow::Result<Outcome> {
    let board = spec.board();
    let counts = ffmat::rank_distribution(&board, p, budget)?;
    let q = p.into();
    let mut ok = true;
    for (k, &c) in counts.iter().enumerate() {
        let want = ffmat::p_k_formula(&board, k)?
            .eval(&q)
            .context("closed form is a polynomial")?;
        ok &= want == c.into();
    }
    let verdict = if ok { "THEOREM1 PASS" } else { "THEOREM1 FAIL" };
    match format {
        Format::Json => {
            let counts: Vec<String> = counts.iter().map(u128::to_string).collect();
            let v = json!({ "board": board.to_string(), "prime": p, "counts": counts, "closed_form_match": ok });
            writeln!(out, "{}", serde_json::to_string(&v)?)?;
        }
        Format::Csv => {
            writeln!(out, "rank,count")?;
            for (k, c) in counts.iter().enumerate() {
                writeln!(out, "{k},{c}")?;
            }
            writeln!(out, "{verdict}")?;
        }
        Format::Text => {
            writeln!(out, "{board} p={p}")?;
            for (k, c) in counts.iter().enumerate() {
                writeln!(out, "rank {k}: {c}")?;
            }
            writeln!(out, "{verdict}")?;
        }
    }
    Ok(if ok {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    })
}

fn cmd_verify(out: &mut dyn Write, suite: Suite, max_n: usize) -> anyhow::Result<Outcome> {
    let (mut pass, mut fail) = (0usize, 0usize);
    let mut io_err = None;
    run_suite(suite, max_n, &mut |r: verify::Record| {
        if r.passed() {
            pass += 1;
        } else {
            fail += 1;
        }
        if io_err.is_none() {
            io_err = writeln!(out, "{r}").err();
        }
    });
    if let Some(e) = io_err {
        return Err(e.into());
    }
    writeln!(out, "TOTAL pass={pass} fail={fail}")?;
    Ok(if fail == 0 {
        Outcome::Ok
    } else {
        Outcome::VerificationFailed
    })
}

fn cmd_table(out: &mut dyn Write, family: Family, n: usize, format: Format) -> anyhow::Result<()> {
    if n == 0 || n > 8 {
        bail!("--n must be between 1 and 8");
    }
    let mut rows = Vec::new();
    for pi in Word::all_permutations(n) {
        let values = (1..=8)
            .map(|v| permstat::stat_family(&pi, family, v))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((
            pi.to_string(),
            permstat::des(&pi),
            permstat::maj(&pi),
            values,
        ));
    }
    match format {
        Format::Json => {
            let v: Vec<_> = rows
                .iter()
                .map(|(p, d, m, vals)| json!({ "perm": p, "des": d, "maj": m, "stats": vals }))
                .collect();
            writeln!(
                out,
                "{}",
                serde_json::to_string(&json!({ "family": family.name(), "rows": v }))?
            )?;
        }
        Format::Csv | Format::Text => {
            let sep = if matches!(format, Format::Csv) {
                ","
            } else {
                " "
            };
            let header: Vec<String> = ["perm", "des", "maj"]
                .iter()
                .map(|s| s.to_string())
                .chain((1..=8).map(|v| format!("{}{v}", family.name())))
                .collect();
            writeln!(out, "{}", header.join(sep))?;
            for (p, d, m, vals) in rows {
                let cells: Vec<String> = [p, d.to_string(), m.to_string()]
                    .into_iter()
                    .chain(vals.iter().map(i64::to_string))
                    .collect();
                writeln!(out, "{}", cells.join(sep))?;
            }
        }
    }
    Ok(())
}

fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<Outcome> {
    match cli.command {
        Command::Rook { board, k, format } => {
            let board = parse_board(&board)?.board();
            let polys = match k {
                Some(k) => {
                    let mut polys = vec![LaurentPoly::zero(); k];
                    polys.push(rook_poly(&board, k));
                    polys
                }
                None => rook_polys(&board),
            };
            emit_polys(out, "R", &polys, k, format)?;
            Ok(Outcome::Ok)
        }
        Command::Hit {
            board,
            k,
            method,
            format,
        } => cmd_hit(out, &parse_board(&board)?, k, method, format),
        Command::Stats {
            word,
            v,
            stat,
            family,
            variant,
            unshifted,
            format,
        } => {
            let w = parse_word(&word, v.as_deref())?;
            let value = stat_value(&w, stat, family.into(), variant, unshifted)?;
            let name = stat
                .to_possible_value()
                .expect("no skipped variants")
                .get_name()
                .to_string();
            match format {
                Format::Json => writeln!(
                    out,
                    "{}",
                    json!({ "word": w.to_string(), "stat": name, "value": value })
                )?,
                Format::Csv => writeln!(out, "word,stat,value\n{w},{name},{value}")?,
                Format::Text => writeln!(out, "{value}")?,
            }
            Ok(Outcome::Ok)
        }
        Command::Matrices {
            board,
            prime,
            budget,
            format,
        } => cmd_matrices(out, &parse_board(&board)?, prime, budget, format),
        Command::Verify { suite, max_n } => cmd_verify(out, suite.into(), max_n),
        Command::Table { family, n, format } => {
            cmd_table(out, family.into(), n, format)?;
            Ok(Outcome::Ok)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());
    let result = run(cli, &mut out);
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(Outcome::Ok), Ok(())) => ExitCode::SUCCESS,
        (Ok(Outcome::VerificationFailed), Ok(())) => ExitCode::from(1),
        (Err(e), _) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
