use std::collections::BTreeMap;
use std::fs;

use anyonsim::category::{check_all, derive, ConsistencyReport, DerivedData, Label, TheoryFile};
use anyonsim::protocols::{
    all_records, dit, random_qudit_state, sdc_braided, sdc_braidfree, teleport_braided,
    teleport_braidfree, BraidedTeleport, Decode, Mode, Schedule, SdcRun, SdcTranscript, Source,
    TeleportRun, TeleportTranscript,
};
use anyonsim::state::FusionState;
use anyonsim::Theory;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::theory::{cache_dir, read_file, solve_cached, Invariants, Kind, TheoryArgs};
use crate::{Command, ModeArg, Output};

const HEXAGON_EPS: f64 = 1e-7;
const ROUND_TRIP_EPS: f64 = 1e-15;

pub fn run(command: Command) -> Result<bool> {
    match command {
        Command::Verify {
            theory,
            braided,
            output,
        } => verify(&theory, braided, &output),
        Command::Solve {
            theory,
            seed,
            output,
        } => solve(&theory, seed, &output),
        Command::Teleport {
            theory,
            mode,
            p,
            anyons,
            seed,
            sweep,
            output,
        } => teleport(&theory, mode, p, anyons, seed, sweep, &output),
        Command::Sdc {
            theory,
            mode,
            message,
            seed,
            sweep,
            output,
        } => sdc(&theory, mode, message, seed, sweep, &output),
        Command::Export {
            theory,
            braided,
            output,
        } => export(&theory, braided, &output),
        Command::ImportCheck { theory, output } => import_check(&theory, &output),
    }
}

fn emit<R: Serialize>(report: &R, output: &Output, summary: impl FnOnce() -> String) -> Result<()> {
    let json = serde_json::to_string_pretty(report).expect("reports serialize") + "\n";
    match &output.out {
        Some(path) => {
            fs::write(path, json)?;
            println!("{}", summary());
        }
        None => print!("{json}"),
    }
    Ok(())
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn mode_of(m: ModeArg) -> Mode {
    match m {
        ModeArg::Braided => Mode::Braided,
        ModeArg::BraidFree => Mode::BraidFree,
    }
}

fn input_rng(seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(1);
    rng
}

fn group_labels(theory: &Theory) -> Vec<Label> {
    let rules = theory.rules();
    rules.labels().filter(|&a| rules.is_abelian(a)).collect()
}

#[derive(Serialize)]
struct VerifyReport {
    command: &'static str,
    theory: String,
    labels: Vec<String>,
    eps: f64,
    hexagon_eps: f64,
    consistency: ConsistencyReport,
    derived: Option<DerivedData>,
    derived_error: Option<String>,
    /// Frobenius-Schur indicators of the invertible labels.
    kappa_g: BTreeMap<String, Option<i8>>,
    pass: bool,
}

fn verify(args: &TheoryArgs, braided: bool, output: &Output) -> Result<bool> {
    let loaded = if braided {
        args.braided(Kind::Ising, &cache_dir(output.out.as_deref()))?
    } else {
        args.load(Kind::Ising)?
    };
    let t = &loaded.theory;
    let hexagon_eps = output.eps.max(HEXAGON_EPS);
    let consistency = check_all(t)?;
    let (derived, derived_error) = match derive(t, output.eps) {
        Ok(d) => (Some(d), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let kappa_g = match &derived {
        Some(d) => group_labels(t)
            .into_iter()
            .map(|g| (t.rules().name(g).to_string(), d.fs[g.idx()]))
            .collect(),
        None => BTreeMap::new(),
    };
    let pass = consistency.passes(output.eps, hexagon_eps) && derived.is_some();
    let report = VerifyReport {
        command: "verify",
        theory: loaded.id,
        labels: t.rules().names().to_vec(),
        eps: output.eps,
        hexagon_eps,
        consistency,
        derived,
        derived_error,
        kappa_g,
        pass,
    };
    emit(&report, output, || {
        let c = &report.consistency;
        let mut lines = vec![
            format!("verify {}: {}", report.theory, verdict(pass)),
            format!(
                "  pentagon: max residual {:.3e} over {} equations",
                c.pentagon.max, c.pentagon.equations
            ),
        ];
        if let Some(h) = &c.hexagon {
            lines.push(format!(
                "  hexagon: max residual {:.3e} over {} equations",
                h.max, h.equations
            ));
        }
        lines.push(format!(
            "  F unitarity defect {:.3e}, dimension defect {:.3e}",
            c.unitarity_defect, c.dimension_defect
        ));
        let kappas: Vec<String> = report
            .kappa_g
            .iter()
            .map(|(g, k)| format!("{g}:{}", k.map_or("?".into(), |k| format!("{k:+}"))))
            .collect();
        lines.push(format!("  kappa_g {}", kappas.join(" ")));
        lines.join("\n")
    })?;
    Ok(pass)
}

#[derive(Serialize)]
struct SolvedTheory {
    #[serde(flatten)]
    file: TheoryFile,
    invariants: Invariants,
}

#[derive(Serialize)]
struct SolveRun {
    theory: String,
    restarts: usize,
    converged: usize,
    classes: Vec<SolvedTheory>,
}

#[derive(Serialize)]
struct SolveReport {
    command: &'static str,
    seed: u64,
    runs: Vec<SolveRun>,
    class_count: usize,
    note: Option<String>,
}

fn solve(args: &TheoryArgs, seed: u64, output: &Output) -> Result<bool> {
    let theories: Vec<(String, Theory)> = match &args.input {
        Some(_) => {
            let l = args.load(Kind::Ising)?;
            vec![(l.id, l.theory.without_braiding())]
        }
        None => args
            .specs(Kind::Ising, true)
            .into_iter()
            .map(|s| Ok((s.id(), s.build()?)))
            .collect::<Result<_>>()?,
    };
    let config = args.solver(seed);
    let cache = cache_dir(output.out.as_deref());
    let mut runs = Vec::new();
    for (id, theory) in theories {
        let solved = solve_cached(&theory, &config, &cache)?;
        let base = TheoryFile::from_theory(&theory);
        let classes = solved
            .classes
            .into_iter()
            .map(|c| SolvedTheory {
                file: TheoryFile {
                    r: Some(c.r),
                    ..base.clone()
                },
                invariants: c.invariants,
            })
            .collect();
        runs.push(SolveRun {
            theory: id,
            restarts: solved.restarts,
            converged: solved.converged,
            classes,
        });
    }
    let class_count = runs.iter().map(|r| r.classes.len()).sum();
    let note = (class_count == 0).then(|| {
        format!(
            "no braiding found in {} restarts; numerical evidence of nonexistence, not a proof",
            config.restarts
        )
    });
    let report = SolveReport {
        command: "solve",
        seed,
        runs,
        class_count,
        note,
    };
    emit(&report, output, || {
        let mut lines: Vec<String> = report
            .runs
            .iter()
            .map(|r| {
                format!(
                    "solve {}: {} classes ({} of {} restarts converged)",
                    r.theory,
                    r.classes.len(),
                    r.converged,
                    r.restarts
                )
            })
            .collect();
        lines.push(format!("total: {} classes", report.class_count));
        lines.extend(report.note.clone());
        lines.join("\n")
    })?;
    Ok(true)
}

#[derive(Serialize)]
struct Sampled<T: Serialize> {
    command: &'static str,
    #[serde(flatten)]
    transcript: T,
    pass: bool,
}

#[derive(Serialize)]
struct TeleportSweep {
    command: &'static str,
    mode: Mode,
    theory_id: String,
    size: usize,
    seed: u64,
    records: usize,
    zero_probability_records: usize,
    min_fidelity: f64,
    worst_record: Vec<u64>,
    min_record_probability: f64,
    max_record_probability: f64,
    total_probability: f64,
    /// Largest deviation of a single measurement probability from `1/|outcomes|`.
    max_step_deviation: f64,
    max_braid_count: u64,
    pass: bool,
}

struct Teleporter<'a> {
    theory: &'a Theory,
    input: FusionState<f64>,
    mode: Mode,
}

impl Teleporter<'_> {
    fn run(
        &self,
        schedule: &mut Schedule,
    ) -> anyonsim::Result<(TeleportRun<f64>, Option<BraidedTeleport<f64>>)> {
        Ok(match self.mode {
            Mode::Braided => {
                let r = teleport_braided(self.theory, &self.input, schedule)?;
                (r.run.clone(), Some(r))
            }
            Mode::BraidFree => (
                teleport_braidfree(self.theory, &self.input, schedule)?,
                None,
            ),
        })
    }
}

fn teleport(
    args: &TheoryArgs,
    mode: ModeArg,
    p: usize,
    anyons: usize,
    seed: u64,
    sweep: bool,
    output: &Output,
) -> Result<bool> {
    let mode = mode_of(mode);
    let (loaded, pairs, alphabet_len) = match mode {
        Mode::Braided => {
            if p == 0 {
                return Err(CliError::Precondition("need at least one qubit".into()));
            }
            let loaded = args.braided(Kind::Ising, &cache_dir(output.out.as_deref()))?;
            (loaded, p, 2 * p)
        }
        Mode::BraidFree => {
            if anyons == 0 || anyons % 2 == 1 {
                return Err(CliError::Precondition(format!(
                    "need an even number of anyons, got {anyons}"
                )));
            }
            (args.load(Kind::Ty)?, anyons / 2, anyons)
        }
    };
    let t = &loaded.theory;
    let input = random_qudit_state(t, pairs, &mut input_rng(seed))?;
    let tele = Teleporter {
        theory: t,
        input,
        mode,
    };
    let size = if mode == Mode::Braided { p } else { anyons };

    if !sweep {
        let (run, braided) = tele.run(&mut Schedule::seeded(seed))?;
        let transcript = match &braided {
            Some(b) => {
                TeleportTranscript::braided(t, &loaded.id, Source::Seed(seed), &tele.input, b)?
            }
            None => {
                TeleportTranscript::braidfree(t, &loaded.id, Source::Seed(seed), &tele.input, &run)?
            }
        };
        let pass = transcript.fidelity >= 1.0 - output.eps;
        let report = Sampled {
            command: "teleport",
            transcript,
            pass,
        };
        emit(&report, output, || {
            let tr = &report.transcript;
            format!(
                "teleport {} {} size={} seed={seed}: record [{}] probability {:.6}, correction [{}], fidelity {:.12}: {}",
                serde_json::to_value(tr.mode).expect("mode serializes").as_str().unwrap_or_default(),
                tr.theory_id,
                tr.size,
                tr.record.join(" "),
                tr.record_probability,
                tr.correction.join(" "),
                tr.fidelity,
                verdict(pass)
            )
        })?;
        return Ok(pass);
    }

    let alphabet = match mode {
        Mode::Braided => vec![Label(0), Label(1)],
        Mode::BraidFree => group_labels(t),
    };
    let uniform = 1.0 / alphabet.len() as f64;
    let mut report = TeleportSweep {
        command: "teleport",
        mode,
        theory_id: loaded.id.clone(),
        size,
        seed,
        records: 0,
        zero_probability_records: 0,
        min_fidelity: f64::INFINITY,
        worst_record: Vec::new(),
        min_record_probability: f64::INFINITY,
        max_record_probability: 0.0,
        total_probability: 0.0,
        max_step_deviation: 0.0,
        max_braid_count: 0,
        pass: false,
    };
    for record in all_records(&alphabet, alphabet_len) {
        report.records += 1;
        let run = match tele.run(&mut Schedule::forced(record.iter().copied())) {
            Ok((run, _)) => run,
            Err(anyonsim::Error::ZeroMass(_)) => {
                report.zero_probability_records += 1;
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        if run.fidelity < report.min_fidelity {
            report.min_fidelity = run.fidelity;
            report.worst_record = record.iter().map(|&l| dit(l)).collect();
        }
        report.min_record_probability = report.min_record_probability.min(run.record_probability);
        report.max_record_probability = report.max_record_probability.max(run.record_probability);
        report.total_probability += run.record_probability;
        for q in &run.probabilities {
            report.max_step_deviation = report.max_step_deviation.max((q - uniform).abs());
        }
        report.max_braid_count = report.max_braid_count.max(run.braid_count);
    }
    report.pass = report.min_fidelity >= 1.0 - output.eps
        && (report.total_probability - 1.0).abs() <= output.eps
        && (mode == Mode::Braided || report.max_braid_count == 0);
    emit(&report, output, || {
        format!(
            "teleport {} size={}: {} records, min fidelity {:.12}, record probability {:.6}..{:.6} (total {:.12}), braids <= {}: {}",
            report.theory_id,
            report.size,
            report.records,
            report.min_fidelity,
            report.min_record_probability,
            report.max_record_probability,
            report.total_probability,
            report.max_braid_count,
            verdict(report.pass)
        )
    })?;
    Ok(report.pass)
}

#[derive(Serialize)]
struct SdcSweep {
    command: &'static str,
    mode: Mode,
    theory_id: String,
    messages: usize,
    decoded: usize,
    failures: Vec<[u64; 2]>,
    max_other_mass: f64,
    max_braid_count: u64,
    pass: bool,
}

fn sdc(
    args: &TheoryArgs,
    mode: ModeArg,
    message: Option<Vec<u16>>,
    seed: u64,
    sweep: bool,
    output: &Output,
) -> Result<bool> {
    let mode = mode_of(mode);
    let loaded = match mode {
        Mode::Braided => args.braided(Kind::Ising, &cache_dir(output.out.as_deref()))?,
        Mode::BraidFree => args.load(Kind::Ty)?,
    };
    let t = &loaded.theory;
    let alphabet = match mode {
        Mode::Braided => vec![Label(0), Label(1)],
        Mode::BraidFree => group_labels(t),
    };
    let send = |i: Label, j: Label| -> Result<SdcRun<f64>> {
        Ok(match mode {
            Mode::Braided => sdc_braided(t, i, j, Decode::Standard)?,
            Mode::BraidFree => sdc_braidfree(t, i, j, Decode::Standard)?,
        })
    };

    if !sweep {
        let (i, j) = match message.as_deref() {
            Some(&[i, j]) => {
                let d = alphabet.len() as u16;
                if i >= d || j >= d {
                    return Err(CliError::Precondition(format!("dits must be below {d}")));
                }
                (alphabet[i as usize], alphabet[j as usize])
            }
            _ => {
                let mut rng = input_rng(seed);
                (
                    alphabet[rng.gen_range(0..alphabet.len())],
                    alphabet[rng.gen_range(0..alphabet.len())],
                )
            }
        };
        let run = send(i, j)?;
        let transcript = SdcTranscript::new(&loaded.id, mode, Source::Seed(seed), &run);
        let pass = transcript.success && transcript.other_mass.iter().all(|&m| m <= output.eps);
        let report = Sampled {
            command: "sdc",
            transcript,
            pass,
        };
        emit(&report, output, || {
            let tr = &report.transcript;
            format!(
                "sdc {}: sent {:?}, decoded {:?}: {}",
                tr.theory_id,
                tr.dits,
                tr.decoded,
                verdict(pass)
            )
        })?;
        return Ok(pass);
    }

    let mut report = SdcSweep {
        command: "sdc",
        mode,
        theory_id: loaded.id.clone(),
        messages: 0,
        decoded: 0,
        failures: Vec::new(),
        max_other_mass: 0.0,
        max_braid_count: 0,
        pass: false,
    };
    for &i in &alphabet {
        for &j in &alphabet {
            let run = send(i, j)?;
            report.messages += 1;
            if run.success() {
                report.decoded += 1;
            } else {
                report.failures.push([dit(i), dit(j)]);
            }
            report.max_other_mass = run
                .other_mass
                .iter()
                .fold(report.max_other_mass, |m, &x| m.max(x));
            report.max_braid_count = report.max_braid_count.max(run.braid_count);
        }
    }
    report.pass = report.decoded == report.messages
        && report.max_other_mass <= output.eps
        && (mode == Mode::Braided || report.max_braid_count == 0);
    emit(&report, output, || {
        format!(
            "sdc {}: {}/{} decoded, max off-branch mass {:.3e}: {}",
            report.theory_id,
            report.decoded,
            report.messages,
            report.max_other_mass,
            verdict(report.pass)
        )
    })?;
    Ok(report.pass)
}

fn export(args: &TheoryArgs, braided: bool, output: &Output) -> Result<bool> {
    let loaded = if braided {
        args.braided(Kind::Ising, &cache_dir(output.out.as_deref()))?
    } else {
        args.load(Kind::Ising)?
    };
    let file = TheoryFile::from_theory(&loaded.theory);
    emit(&file, output, || format!("exported {}", loaded.id))?;
    Ok(true)
}

#[derive(Serialize)]
struct ImportReport {
    command: &'static str,
    theory: String,
    labels: usize,
    f_blocks: usize,
    r_symbols: Option<usize>,
    /// Largest difference between a value in the file and the imported value.
    max_entry_deviation: f64,
    round_trip_exact: bool,
    pass: bool,
}

fn import_check(args: &TheoryArgs, output: &Output) -> Result<bool> {
    let path = args
        .input
        .as_deref()
        .ok_or_else(|| CliError::Parse("import-check needs --input".into()))?;
    let file = read_file(path)?;
    let theory: Theory = file.to_theory()?;
    let mut deviation = 0.0f64;
    let close =
        |z: anyonsim::scalar::C<f64>, [re, im]: [f64; 2]| (z.re - re).abs().max((z.im - im).abs());
    for block in &file.f {
        let key = block.abcd.map(Label);
        for (i, &f) in block.rows.iter().enumerate() {
            for (j, &e) in block.cols.iter().enumerate() {
                let z = theory.f_entry(key, Label(f), Label(e))?;
                deviation = deviation.max(close(z, block.entries[i * block.cols.len() + j]));
            }
        }
    }
    for s in file.r.iter().flatten() {
        deviation = deviation.max(close(
            theory.r(Label(s.ab[0]), Label(s.ab[1]), Label(s.c))?,
            s.value,
        ));
    }
    let again: Theory =
        TheoryFile::from_json(&TheoryFile::from_theory(&theory).to_json())?.to_theory()?;
    let round_trip_exact = again == theory;
    let pass = deviation <= ROUND_TRIP_EPS && round_trip_exact;
    let report = ImportReport {
        command: "import-check",
        theory: path.display().to_string(),
        labels: file.labels.len(),
        f_blocks: file.f.len(),
        r_symbols: file.r.as_ref().map(Vec::len),
        max_entry_deviation: deviation,
        round_trip_exact,
        pass,
    };
    emit(&report, output, || {
        format!(
            "import-check {}: {} labels, {} F blocks, max deviation {:.1e}, round trip {}: {}",
            report.theory,
            report.labels,
            report.f_blocks,
            report.max_entry_deviation,
            if round_trip_exact { "exact" } else { "inexact" },
            verdict(pass)
        )
    })?;
    Ok(pass)
}
