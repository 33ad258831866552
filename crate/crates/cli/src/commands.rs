use std::fmt::Write as _;
use std::path::Path;

use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;
use sha2::{Digest, Sha256};

use subspace_codes::bounds::{
    barg_lower, barg_upper, binary_entropy, blokh_zyablov_rate, random_coding_rate, shannon_lower, zyablov_rate,
};
use subspace_codes::channel::{apply_noisy_operator_channel, apply_operator_channel, NoisyChannelSpec, OperatorChannelSpec};
use subspace_codes::codes::{
    binary_to_lines, cp_distance_bound, cp_max_k_for_delta, random_ensemble_code, CodeParameters, CpSpec, SubspaceCode,
    DEFAULT_PAIR_CAP, DEFAULT_SIZE_CAP,
};
use subspace_codes::decoder::{decode, guarantee_noisy};
use subspace_codes::field::{largest_prime_below, FiniteField};
use subspace_codes::rng::trial_rng;
use subspace_codes::subspace::distance;
use subspace_codes::Error as CoreError;

use crate::config::{ChannelConfig, CodeConfig, ExperimentConfig};
use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: &str = "v1";

pub const BOUND_LABELS: [&str; 8] =
    ["barg_lower", "barg_upper", "shannon", "random_coding", "cp", "gv", "zyablov", "blokh_zyablov"];

const DEFAULT_TRIALS: usize = 1000;

/// Stream reserved for drawing a random-ensemble code, apart from all trial streams.
const CODE_STREAM: u64 = u64::MAX;

fn header(command: &str, hash: &str, seed: Option<u64>) -> String {
    let seed = seed.map_or_else(|| "none".to_string(), |s| s.to_string());
    format!("# subcodes {command} schema={SCHEMA_VERSION} config_sha256={hash} seed={seed}\n")
}

fn csv_body(columns: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(columns).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

pub fn build_code(cfg: &ExperimentConfig) -> CliResult<SubspaceCode> {
    let code = cfg.code.as_ref().ok_or_else(|| CliError::Config("missing `code` section".into()))?;
    Ok(match code {
        CodeConfig::Cp { q, k, character, size_cap } => {
            let spec = cp_spec(*q, *k, *character)?;
            spec.construct_with_cap(size_cap.map_or(DEFAULT_SIZE_CAP, u128::from))?
        }
        CodeConfig::Binary { n, words } => {
            let parsed = words
                .iter()
                .map(|w| {
                    w.chars()
                        .map(|c| match c {
                            '0' => Ok(0u8),
                            '1' => Ok(1u8),
                            other => Err(CliError::Config(format!("binary word {w:?} contains {other:?}"))),
                        })
                        .collect::<CliResult<Vec<u8>>>()
                })
                .collect::<CliResult<Vec<_>>>()?;
            binary_to_lines(&parsed, *n)?
        }
        CodeConfig::RandomEnsemble { n, m, size, field, seed } => {
            let seed = match seed {
                Some(s) => *s,
                None => cfg.require_seed()?,
            };
            random_ensemble_code(*n, *m, *size, *field, &mut trial_rng(seed, CODE_STREAM))?
        }
        CodeConfig::File { path } => SubspaceCode::load(path)?,
    })
}

fn cp_spec(q: u64, k: usize, character: u32) -> CliResult<CpSpec> {
    let field = FiniteField::with_order(q)?;
    let index = field.element(character)?;
    Ok(CpSpec::new(field, k)?.with_character(index)?)
}

/// Minimum distance when the code is small enough to search exhaustively.
fn searchable_min_distance(code: &SubspaceCode, cap: usize) -> CliResult<Option<f64>> {
    match code.min_distance_exhaustive(cap) {
        Ok(md) => Ok(Some(md.value)),
        Err(CoreError::CapExceeded { .. }) | Err(CoreError::TooFewCodewords) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ConstructReport {
    pub n: usize,
    pub l: usize,
    pub size: usize,
    pub lambda: f64,
    pub rate: f64,
    pub d_min: Option<f64>,
    pub delta: Option<f64>,
    /// Guaranteed normalized distance for CP codes.
    pub delta_bound: Option<f64>,
}

impl ConstructReport {
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n = {}", self.n);
        let _ = writeln!(s, "l = {}", self.l);
        let _ = writeln!(s, "M = {}", self.size);
        let _ = writeln!(s, "lambda = {}", self.lambda);
        let _ = writeln!(s, "R = {}", self.rate);
        match (self.d_min, self.delta) {
            (Some(d), Some(delta)) => {
                let _ = writeln!(s, "d_min = {d}");
                let _ = writeln!(s, "delta = {delta}");
            }
            _ => {
                let _ = writeln!(s, "d_min = (not computed: code exceeds the pair cap)");
            }
        }
        if let Some(b) = self.delta_bound {
            let _ = writeln!(s, "delta_bound = {b}");
        }
        s
    }
}

/// Builds the configured code and reports its parameters.
pub fn construct(cfg: &ExperimentConfig) -> CliResult<(SubspaceCode, ConstructReport)> {
    let code = build_code(cfg)?;
    let cap = cfg.pair_cap.unwrap_or(DEFAULT_PAIR_CAP);
    let (n, l, size) = (code.ambient_dim(), code.max_dim(), code.len());
    let params: Option<CodeParameters> = match searchable_min_distance(&code, cap)? {
        Some(_) => Some(code.parameters_with_cap(cap)?),
        None => None,
    };
    let delta_bound = match cfg.code {
        Some(CodeConfig::Cp { q, k, .. }) => Some(cp_distance_bound(q, k)),
        _ => None,
    };
    let report = ConstructReport {
        n,
        l,
        size,
        lambda: l as f64 / n as f64,
        rate: (size as f64).ln() / n as f64,
        d_min: params.map(|p| p.d_min),
        delta: params.map(|p| p.delta),
        delta_bound,
    };
    Ok((code, report))
}

fn resolve_kept(channel: &ChannelConfig, code: &SubspaceCode) -> CliResult<usize> {
    match (channel.k, channel.rho) {
        (Some(_), Some(_)) => Err(CliError::Config("give either `k` or `rho`, not both".into())),
        (Some(k), None) => Ok(k),
        (None, Some(rho)) => {
            if !code.is_constant_dimension() {
                return Err(CliError::Config("`rho` needs a constant-dimension code; use `k`".into()));
            }
            code.max_dim()
                .checked_sub(rho)
                .ok_or_else(|| CliError::Config(format!("rho = {rho} exceeds the codeword dimension {}", code.max_dim())))
        }
        (None, None) => Ok(code.max_dim()),
    }
}

struct TrialRow {
    rho: usize,
    t: usize,
    delta_rot: f64,
    r_d: usize,
    tx: usize,
    rx: usize,
    d_tx_rx: f64,
    guaranteed: Option<bool>,
}

pub const SIMULATE_COLUMNS: [&str; 10] =
    ["trial", "rho", "t", "delta_rot", "r_d", "tx_index", "rx_index", "correct", "d_tx_rx", "guarantee_flag"];

/// Seeded Monte-Carlo run of the (noisy) operator channel followed by decoding.
pub fn simulate(cfg: &ExperimentConfig) -> CliResult<String> {
    let seed = cfg.require_seed()?;
    let code = build_code(cfg)?;
    let channel = cfg.channel.clone().unwrap_or_default();
    if !(channel.delta >= 0.0) {
        return Err(CliError::Config(format!("delta must be nonnegative, got {}", channel.delta)));
    }
    let trials = cfg.trials.unwrap_or(DEFAULT_TRIALS);
    let k = resolve_kept(&channel, &code)?;
    let needed = code.max_dim().min(k) + channel.t + channel.r_d;
    if needed > code.ambient_dim() {
        return Err(CliError::Infeasible(format!(
            "kept + error + interference dimensions {needed} exceed the ambient dimension {}",
            code.ambient_dim()
        )));
    }
    let d_min = searchable_min_distance(&code, cfg.pair_cap.unwrap_or(DEFAULT_PAIR_CAP))?;
    let base = OperatorChannelSpec { k, t: channel.t };
    let noisy = NoisyChannelSpec { base, delta: channel.delta, r_d: channel.r_d };
    let plain = channel.delta == 0.0 && channel.r_d == 0;

    let rows = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = trial_rng(seed, trial as u64);
            let tx = rng.random_range(0..code.len());
            let sent = code.codeword(tx);
            let out = if plain {
                apply_operator_channel(sent, base, &mut rng)?
            } else {
                apply_noisy_operator_channel(sent, noisy, &mut rng)?
            };
            let decoded = decode(&code, &out.received)?;
            Ok(TrialRow {
                rho: out.rho,
                t: out.t,
                delta_rot: out.delta_rot,
                r_d: out.r_d,
                tx,
                rx: decoded.codeword_index,
                d_tx_rx: distance(sent, &out.received)?,
                guaranteed: d_min
                    .map(|d| guarantee_noisy(d, out.rho as f64, out.t as f64, channel.delta, out.r_d as f64)),
            })
        })
        .collect::<Result<Vec<TrialRow>, CoreError>>()?;

    let correct = rows.iter().filter(|r| r.tx == r.rx).count();
    let guaranteed: Vec<&TrialRow> = rows.iter().filter(|r| r.guaranteed == Some(true)).collect();
    let guaranteed_correct = guaranteed.iter().filter(|r| r.tx == r.rx).count();
    let rate = |num: usize, den: usize| if den == 0 { String::new() } else { (num as f64 / den as f64).to_string() };

    let mut records: Vec<Vec<String>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            vec![
                i.to_string(),
                r.rho.to_string(),
                r.t.to_string(),
                r.delta_rot.to_string(),
                r.r_d.to_string(),
                r.tx.to_string(),
                r.rx.to_string(),
                (r.tx == r.rx).to_string(),
                r.d_tx_rx.to_string(),
                opt(r.guaranteed),
            ]
        })
        .collect();
    // Summary: overall success rate under `correct`, success rate among
    // guaranteed trials under `guarantee_flag`.
    let mut summary = vec![String::new(); SIMULATE_COLUMNS.len()];
    summary[0] = "summary".into();
    summary[7] = rate(correct, rows.len());
    summary[9] = rate(guaranteed_correct, guaranteed.len());
    records.push(summary);

    Ok(header("simulate", &cfg.hash(), Some(seed)) + &csv_body(&SIMULATE_COLUMNS, records))
}

pub const BOUNDS_COLUMNS: [&str; 7] = ["label", "unit", "n", "m", "beta", "delta", "rate"];

/// Rate/distance curves on a uniform `δ` grid.
pub fn bounds(cfg: &ExperimentConfig) -> CliResult<String> {
    let b = cfg.bounds.clone().unwrap_or_default();
    if b.points < 2 {
        return Err(CliError::Config(format!("grid needs at least 2 points, got {}", b.points)));
    }
    if b.beta != 1 && b.beta != 2 {
        return Err(CliError::Config(format!("beta must be 1 or 2, got {}", b.beta)));
    }
    let grid: Vec<f64> = (1..=b.points).map(|i| i as f64 / b.points as f64).collect();
    let mut rows = Vec::new();
    let mut push = |label: &str, unit: &str, n: Option<usize>, delta: f64, rate: f64| {
        rows.push(vec![
            label.to_string(),
            unit.to_string(),
            opt(n),
            b.m.to_string(),
            b.beta.to_string(),
            delta.to_string(),
            // Adding zero turns a `-0` endpoint into `0`.
            (rate + 0.0).to_string(),
        ]);
    };
    for label in &b.labels {
        match label.as_str() {
            "barg_lower" => grid.iter().try_for_each(|&d| Ok::<_, CliError>(push(label, "nats", None, d, barg_lower(b.m, d, b.beta)?)))?,
            "barg_upper" => grid.iter().try_for_each(|&d| Ok::<_, CliError>(push(label, "nats", None, d, barg_upper(b.m, d, b.beta)?)))?,
            "shannon" => grid.iter().try_for_each(|&d| Ok::<_, CliError>(push(label, "nats", None, d, shannon_lower(d)?)))?,
            "random_coding" => {
                for &d in &grid {
                    let r = random_coding_rate(b.m, d, b.beta, b.epsilon)?;
                    if r >= 0.0 {
                        push(label, "nats", None, d, r);
                    }
                }
            }
            "cp" => {
                for &n in &b.cp_n {
                    let q = largest_prime_below(n as u64 + 2)
                        .filter(|&q| q >= 3)
                        .ok_or_else(|| CliError::Config(format!("no CP code of length at most {n}")))?;
                    // Inverse of δ = 1 − qR²/(ln q)².
                    for &d in &grid {
                        let rate = (q as f64).ln() * ((1.0 - d) / q as f64).sqrt();
                        push(label, "nats", Some(q as usize - 1), d, rate);
                    }
                }
            }
            "gv" => {
                for &d in grid.iter().filter(|&&d| d < 0.5) {
                    push(label, "bits", None, d, 1.0 - binary_entropy(d));
                }
            }
            "zyablov" => {
                for &d in grid.iter().filter(|&&d| d < 0.5) {
                    push(label, "bits", None, d, zyablov_rate(d)?);
                }
            }
            "blokh_zyablov" => {
                for &d in grid.iter().filter(|&&d| d < 0.5) {
                    push(label, "bits", None, d, blokh_zyablov_rate(d)?);
                }
            }
            other => {
                return Err(CliError::Config(format!("unknown bound label {other:?}; known: {}", BOUND_LABELS.join(", "))))
            }
        }
    }
    Ok(header("bounds", &cfg.hash(), cfg.seed) + &csv_body(&BOUNDS_COLUMNS, rows))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Figure3Row {
    pub exponent: u32,
    pub p: u64,
    /// Complex length `p − 1`.
    pub n_complex: usize,
    /// Real length after doubling, `2(p − 1)`.
    pub n_real: usize,
    /// Nominal real length `2p` used when the family is quoted by prime.
    pub n_nominal: usize,
    pub chosen_k: usize,
    pub distance_bound: f64,
    pub ln_code_size: f64,
}

pub const FIGURE3_COLUMNS: [&str; 10] = [
    "exponent",
    "p",
    "n_complex",
    "n_real",
    "n_nominal",
    "chosen_k",
    "distance_bound",
    "ln_code_size",
    "calderbank_ln_size",
    "ashikhmin_ln_size",
];

/// CP line codes with `δ ≥ δ_target` at `p` the largest prime below `2^{e−1}`.
pub fn figure3_rows(cfg: &ExperimentConfig) -> CliResult<Vec<Figure3Row>> {
    let f = cfg.figure3.clone().unwrap_or_default();
    if f.min_exponent < 3 || f.max_exponent > 17 || f.min_exponent > f.max_exponent {
        return Err(CliError::Config(format!(
            "exponents must satisfy 3 <= min <= max <= 17, got {}..{}",
            f.min_exponent, f.max_exponent
        )));
    }
    if !(f.delta_target > 0.0 && f.delta_target < 1.0) {
        return Err(CliError::Config(format!("delta_target must lie in (0, 1), got {}", f.delta_target)));
    }
    (f.min_exponent..=f.max_exponent)
        .map(|e| {
            let p = largest_prime_below(1u64 << (e - 1)).expect("a prime exists below 4");
            let chosen_k = cp_max_k_for_delta(p, f.delta_target);
            // chosen_k < p, so every degree 1..=chosen_k is a monomial and M = p^chosen_k.
            Ok(Figure3Row {
                exponent: e,
                p,
                n_complex: p as usize - 1,
                n_real: 2 * (p as usize - 1),
                n_nominal: 2 * p as usize,
                chosen_k,
                distance_bound: cp_distance_bound(p, chosen_k),
                ln_code_size: chosen_k as f64 * (p as f64).ln(),
            })
        })
        .collect()
}

pub fn figure3(cfg: &ExperimentConfig) -> CliResult<String> {
    let rows = figure3_rows(cfg)?.into_iter().map(|r| {
        vec![
            r.exponent.to_string(),
            r.p.to_string(),
            r.n_complex.to_string(),
            r.n_real.to_string(),
            r.n_nominal.to_string(),
            r.chosen_k.to_string(),
            r.distance_bound.to_string(),
            r.ln_code_size.to_string(),
            String::new(),
            String::new(),
        ]
    });
    Ok(header("figure3", &cfg.hash(), cfg.seed) + &csv_body(&FIGURE3_COLUMNS, rows))
}

pub const DISTANCE_COLUMNS: [&str; 3] = ["i", "j", "distance"];

/// Distance between every codeword of `a` and every codeword of `b`.
pub fn distance_table(a: &Path, b: &Path) -> CliResult<String> {
    let read = |p: &Path| std::fs::read_to_string(p).map_err(|e| CliError::Config(format!("{}: {e}", p.display())));
    let (ta, tb) = (read(a)?, read(b)?);
    let (ca, cb) = (SubspaceCode::from_json(&ta)?, SubspaceCode::from_json(&tb)?);
    if ca.ambient_dim() != cb.ambient_dim() {
        return Err(CliError::Config(format!(
            "codes live in different ambient spaces ({} vs {})",
            ca.ambient_dim(),
            cb.ambient_dim()
        )));
    }
    let mut hasher = Sha256::new();
    hasher.update(ta.as_bytes());
    hasher.update(tb.as_bytes());
    let hash = hex::encode(hasher.finalize());
    let (pa, pb) = (ca.projections(), cb.projections());
    let mut rows = Vec::with_capacity(pa.len() * pb.len());
    for (i, x) in pa.iter().enumerate() {
        for (j, y) in pb.iter().enumerate() {
            rows.push(vec![i.to_string(), j.to_string(), x.distance(y)?.to_string()]);
        }
    }
    Ok(header("distance", &hash, None) + &csv_body(&DISTANCE_COLUMNS, rows))
}
