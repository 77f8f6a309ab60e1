//! One function per subcommand; everything returns an exit code and leaves
//! the printing policy (results on stdout, diagnostics on stderr) here.

use std::fs;
use std::io::{Read, Write};
use std::path::Path;
use std::process::ExitCode;

use degseq_core::realize::choudum_realize_with_stats;
use degseq_core::{
    classify_regime, estimate_graphical_prob, first_violation, is_graphical_sorted, ks_two_sample,
    max_law_check, parity_check, sample_iid, sample_sorted_renyi, verify_realization, DegreeSequence,
    DistConfig, DistError, ExperimentConfig, McError, RealizeError, SamplerKind, SeqError, TailSpec,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::FormatArg;

const EXIT_NEGATIVE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn internal(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INTERNAL,
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<SeqError> for Failure {
    fn from(e: SeqError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<DistError> for Failure {
    fn from(e: DistError) -> Self {
        Failure::input(e.to_string())
    }
}

impl From<McError> for Failure {
    fn from(e: McError) -> Self {
        Failure::input(e.to_string())
    }
}

fn read_sequence(file: Option<&Path>) -> Result<DegreeSequence, Failure> {
    let text = match file {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map_err(|e| Failure::input(format!("{}: {e}", p.display())))?,
        _ => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    Ok(DegreeSequence::parse(&text)?)
}

fn load_spec(path: &Path) -> Result<(TailSpec, DistConfig), Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let config: DistConfig = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let spec = TailSpec::from_config(&config)?;
    Ok((spec, config))
}

fn materialize_seed(seed: Option<u64>) -> u64 {
    seed.unwrap_or_else(rand::random)
}

fn write_or_stdout(out: Option<&Path>, content: &str) -> Result<(), Failure> {
    match out {
        Some(p) => {
            fs::write(p, content).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?
        }
        None => std::io::stdout().write_all(content.as_bytes())?,
    }
    Ok(())
}

/// Verdict line shared by `check` and the negative branch of `realize`.
fn verdict(seq: &DegreeSequence) -> (bool, String) {
    let sorted = seq.sorted();
    let even = seq.sum_parity().is_even();
    let parity = if even { "even" } else { "odd" };
    let head = format!("n={} total={} {parity}", seq.len(), seq.total());
    if is_graphical_sorted(&sorted) {
        return (true, format!("GRAPHICAL {head}"));
    }
    let detail = match first_violation(&sorted) {
        Some(v) => format!(", violated at j={}: {} > {}", v.j, v.lhs, v.rhs),
        None => String::new(),
    };
    (false, format!("NOT GRAPHICAL {head}{detail}"))
}

pub fn check(file: Option<&Path>) -> Result<ExitCode, Failure> {
    let seq = read_sequence(file)?;
    let (ok, line) = verdict(&seq);
    println!("{line}");
    Ok(if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_NEGATIVE)
    })
}

pub fn realize(file: Option<&Path>, out: Option<&Path>) -> Result<ExitCode, Failure> {
    let seq = read_sequence(file)?;
    let (ok, line) = verdict(&seq);
    if !ok {
        println!("{line}");
        return Ok(ExitCode::from(EXIT_NEGATIVE));
    }
    // realize in sorted order, then relabel back to the input order
    let graph = match degseq_core::realize_sequence(&seq) {
        Ok(g) => g,
        Err(RealizeError::NotGraphical { step }) | Err(RealizeError::NoSwapPair { step }) => {
            return Err(Failure::internal(format!(
                "construction failed at step {step} on a sequence the test accepted"
            )));
        }
        Err(other) => return Err(Failure::internal(other.to_string())),
    };
    if !verify_realization(&graph, &seq) {
        return Err(Failure::internal(
            "realized graph does not reproduce the requested degrees",
        ));
    }
    let swaps = choudum_realize_with_stats(&seq.sorted())
        .map(|(_, s)| s)
        .unwrap_or(0);
    write_or_stdout(out, &graph.to_edge_list())?;
    eprintln!(
        "realized n={} m={} swaps={swaps}",
        graph.vertex_count(),
        graph.edge_count()
    );
    Ok(ExitCode::SUCCESS)
}

pub fn sample(
    dist: &Path,
    n: u64,
    count: u64,
    seed: Option<u64>,
    sampler: SamplerKind,
    out: Option<&Path>,
) -> Result<ExitCode, Failure> {
    if n < 1 || n >= 1 << 32 {
        return Err(Failure::input(format!("n = {n} outside [1, 2^32)")));
    }
    let (spec, config) = load_spec(dist)?;
    let seed = materialize_seed(seed);
    let echo = serde_json::json!({
        "dist": config, "n": n, "count": count, "seed": seed, "sampler": sampler,
    });
    eprintln!("# config: {echo}");
    let mut body = String::new();
    for i in 0..count {
        // the same (seed, n, trial) stream keying the estimator uses
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream((n << 32) | i);
        let line = match sampler {
            SamplerKind::Renyi => sample_sorted_renyi(&spec, n as usize, &mut rng)
                .map(|s| s.into_sequence().to_line()),
            SamplerKind::Iid => sample_iid(&spec, n as usize, &mut rng).map(|s| s.to_line()),
        };
        match line {
            Ok(text) => {
                body.push_str(&text);
                body.push('\n');
            }
            Err(DistError::CapExceeded { .. }) => body.push_str("# cap-exceeded\n"),
            Err(other) => return Err(other.into()),
        }
    }
    write_or_stdout(out, &body)?;
    Ok(ExitCode::SUCCESS)
}

#[allow(clippy::too_many_arguments)]
pub fn estimate(
    dist: &Path,
    grid: Vec<u64>,
    trials: u64,
    seed: Option<u64>,
    workers: usize,
    sampler: SamplerKind,
    out: Option<&Path>,
    format: FormatArg,
) -> Result<ExitCode, Failure> {
    let (_, config) = load_spec(dist)?;
    let seed = materialize_seed(seed);
    let cfg = ExperimentConfig {
        dist: config,
        n_grid: grid,
        trials,
        seed,
        workers,
        sampler,
    };
    eprintln!(
        "# config: {}",
        serde_json::to_string(&cfg).expect("config serializes")
    );
    if out.is_none() && matches!(format, FormatArg::Both) {
        return Err(Failure::input(
            "--format both needs --out to name the two files",
        ));
    }
    let series = estimate_graphical_prob(&cfg)?;
    for row in &series.rows {
        eprintln!(
            "n={} p_hat={} ci=[{}, {}] overflow={}",
            row.n, row.p_hat, row.ci_low, row.ci_high, row.overflow
        );
    }
    match out {
        None => {
            let text = match format {
                FormatArg::Csv => series.to_csv(),
                FormatArg::Json => series.to_json(),
                FormatArg::Both => unreachable!("rejected above"),
            };
            print!("{text}");
        }
        Some(base) => {
            let named = |ext: &str| {
                let mut p = base.as_os_str().to_owned();
                p.push(".");
                p.push(ext);
                std::path::PathBuf::from(p)
            };
            if matches!(format, FormatArg::Csv | FormatArg::Both) {
                let p = named("csv");
                fs::write(&p, series.to_csv())
                    .map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
                eprintln!("wrote {}", p.display());
            }
            if matches!(format, FormatArg::Json | FormatArg::Both) {
                let p = named("json");
                fs::write(&p, series.to_json())
                    .map_err(|e| Failure::input(format!("{}: {e}", p.display())))?;
                eprintln!("wrote {}", p.display());
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

pub fn classify(dist: &Path, probe_bound: u64) -> Result<ExitCode, Failure> {
    let (spec, _) = load_spec(dist)?;
    let report = classify_regime(&spec, probe_bound)?;
    let mut text = serde_json::to_string_pretty(&report).expect("report serializes");
    text.push('\n');
    print!("{text}");
    eprintln!("label: {}", report.label);
    Ok(ExitCode::SUCCESS)
}

pub fn validate_sampler(
    dist: &Path,
    n: u64,
    draws: u64,
    seed: Option<u64>,
    negative_control: bool,
) -> Result<ExitCode, Failure> {
    if n < 1 || draws < n {
        return Err(Failure::input("needs n >= 1 and draws >= n"));
    }
    let (spec, config) = load_spec(dist)?;
    let seed = materialize_seed(seed);
    let echo = serde_json::json!({
        "dist": config, "n": n, "draws": draws, "seed": seed,
        "negative_control": negative_control,
    });
    eprintln!("# config: {echo}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0u32;

    // the sorted sampler against the iid one, flattened to one collection
    // per side; under the negative control the iid side draws through a
    // deliberately warped uniform
    let groups = draws / n;
    let per_side = (groups * n) as usize;
    let mut renyi_side = Vec::with_capacity(per_side);
    for _ in 0..groups {
        let s = sample_sorted_renyi(&spec, n as usize, &mut rng)?;
        renyi_side.extend(s.values().iter().map(|&v| v as f64));
    }
    let mut iid_side = Vec::with_capacity(per_side);
    for _ in 0..per_side {
        let mut u: f64 = rng.gen();
        if negative_control {
            u = u.powf(1.5);
        }
        iid_side.push(spec.quantile_from_unit(u)? as f64);
    }
    let ks = ks_two_sample(&renyi_side, &iid_side).expect("both sides are nonempty");
    let ks_pass = ks.p_value > 1e-3;
    failures += u32::from(!ks_pass);
    println!(
        "ks-two-sample: D={} p={} per_side={per_side} {}",
        ks.statistic,
        ks.p_value,
        if ks_pass { "pass" } else { "FAIL" }
    );

    let max_law = max_law_check(&spec, n, draws, &mut rng)?;
    failures += u32::from(!max_law.pass);
    println!(
        "max-law: n={n} sup={} band={} {}",
        max_law.sup_distance,
        max_law.band,
        if max_law.pass { "pass" } else { "FAIL" }
    );

    let parity = parity_check(&spec, n, draws, &mut rng)?;
    failures += u32::from(!parity.within_three_sigma);
    println!(
        "parity: n={n} exact={} observed={} sigma={} {}",
        parity.exact_even,
        parity.observed_even,
        parity.sigma,
        if parity.within_three_sigma {
            "pass"
        } else {
            "FAIL"
        }
    );

    if failures == 0 {
        println!("all checks passed");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("{failures} of 3 checks failed");
        Ok(ExitCode::from(EXIT_NEGATIVE))
    }
}
