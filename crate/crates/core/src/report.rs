//! Per-instance analysis aggregating construction, weight distribution and
//! Gray-image verdicts, with a fixed serialized field order.

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};

use crate::closed_form::{
    code_size_formula, distribution_formula, enumerator_string, kernel_size_formula,
};
use crate::code::{BruteForce, DefiningSet, Instance, WeightDistribution};
use crate::error::{Error, Result};
use crate::gray::{
    all_weights_divisible_by_4, ashikhmin_barg_check, gray_basis, gray_image, is_minimal_exact,
    is_self_orthogonal_exact, paper_claim, self_orthogonality_audit, PaperClaim,
    DEFAULT_BUDGET_BYTES, GRAM_AUDIT_MAX_WORDS,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum Mode {
    /// Exhaustive distribution and every Gray-image check.
    #[default]
    Analyze,
    /// Exhaustive distribution; no codeword materialization.
    Brute,
    /// Closed-form distribution and sizes; no enumeration.
    Closed,
    /// `Analyze` plus a closed-form cross-check.
    Compare,
}

#[derive(Clone, Copy, Debug)]
pub struct AnalysisOptions {
    pub mode: Mode,
    pub budget_bytes: u64,
    pub message_distribution: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        Self {
            mode: Mode::Analyze,
            budget_bytes: DEFAULT_BUDGET_BYTES,
            message_distribution: false,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightEntry {
    pub weight: u64,
    pub frequency: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Params {
    pub n: u64,
    pub k: u32,
    pub d: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AbRatio {
    pub w0: u64,
    pub w_inf: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct DiffEntry {
    pub weight: u64,
    pub brute: u64,
    pub closed: u64,
}

/// `true`, `false`, or `"skipped"` when codewords were not materialized.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Verdict {
    Known(bool),
    Skipped,
}

impl Verdict {
    pub fn is_true(self) -> bool {
        self == Verdict::Known(true)
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Verdict::Known(b) => s.serialize_bool(*b),
            Verdict::Skipped => s.serialize_str("skipped"),
        }
    }
}

impl<'de> Deserialize<'de> for Verdict {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match BoolOrStr::deserialize(d)? {
            BoolOrStr::Bool(b) => Ok(Verdict::Known(b)),
            BoolOrStr::Str(s) if s == "skipped" => Ok(Verdict::Skipped),
            BoolOrStr::Str(s) => Err(de::Error::custom(format!("unexpected verdict {s:?}"))),
        }
    }
}

#[derive(Deserialize)]
#[serde(untagged)]
enum BoolOrStr {
    Bool(bool),
    Str(String),
}

impl Serialize for PaperClaim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            PaperClaim::Minimal => s.serialize_bool(true),
            PaperClaim::NoClaim => s.serialize_bool(false),
            PaperClaim::Open => s.serialize_str("open"),
        }
    }
}

impl<'de> Deserialize<'de> for PaperClaim {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        match BoolOrStr::deserialize(d)? {
            BoolOrStr::Bool(true) => Ok(PaperClaim::Minimal),
            BoolOrStr::Bool(false) => Ok(PaperClaim::NoClaim),
            BoolOrStr::Str(s) if s == "open" => Ok(PaperClaim::Open),
            BoolOrStr::Str(s) => Err(de::Error::custom(format!("unexpected claim {s:?}"))),
        }
    }
}

/// Full results for one `(m, D, E, F)` instance. Field order is the
/// serialized key order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub m: u32,
    #[serde(rename = "D")]
    pub d: Vec<u32>,
    #[serde(rename = "E")]
    pub e: Vec<u32>,
    #[serde(rename = "F")]
    pub f: Vec<u32>,
    #[serde(rename = "L_length")]
    pub l_length: u64,
    pub gray_length: u64,
    pub code_size: u64,
    pub kernel_size: u64,
    pub distribution: Vec<WeightEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message_distribution: Option<Vec<WeightEntry>>,
    pub enumerator: String,
    pub params: Params,
    pub self_orthogonal: bool,
    pub weights_div4: bool,
    pub ab_ratio: AbRatio,
    pub ab_minimal: bool,
    pub exact_minimal: Verdict,
    pub paper_claim_minimal: PaperClaim,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub distributions_match: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diff: Option<Vec<DiffEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub warning: Option<String>,
}

fn entries(dist: &WeightDistribution) -> Vec<WeightEntry> {
    dist.iter()
        .map(|(weight, frequency)| WeightEntry { weight, frequency })
        .collect()
}

/// Compares the two `(message, codeword)` pairs; returns the codeword-level
/// diff followed by any message-level disagreement.
fn compare(
    brute: &(WeightDistribution, WeightDistribution),
    closed: &(WeightDistribution, WeightDistribution),
) -> Vec<DiffEntry> {
    let mut out: Vec<DiffEntry> = brute
        .1
        .diff(&closed.1)
        .into_iter()
        .map(|(weight, brute, closed)| DiffEntry {
            weight,
            brute,
            closed,
        })
        .collect();
    if out.is_empty() {
        out = brute
            .0
            .diff(&closed.0)
            .into_iter()
            .map(|(weight, brute, closed)| DiffEntry {
                weight,
                brute,
                closed,
            })
            .collect();
    }
    out
}

pub fn analyze(inst: &Instance, opts: &AnalysisOptions) -> Result<AnalysisReport> {
    let set = DefiningSet::new(inst);
    let gray_length = inst.gray_length();

    let (message, codeword, kernel_size) = match opts.mode {
        Mode::Closed => {
            let (msg, cw) = distribution_formula(inst)?;
            (msg, cw, kernel_size_formula(inst))
        }
        _ => {
            let bf = BruteForce::run(&set)?;
            let k = bf.kernel.len() as u64;
            (bf.message, bf.codeword, k)
        }
    };
    let code_size = inst.message_count() / kernel_size;

    let (distributions_match, diff) = if opts.mode == Mode::Compare {
        let closed = distribution_formula(inst)?;
        let mut d = compare(&(message.clone(), codeword.clone()), &closed);
        if d.is_empty() && code_size != code_size_formula(inst) {
            d.push(DiffEntry {
                weight: 0,
                brute: kernel_size,
                closed: kernel_size_formula(inst),
            });
        }
        let matched = d.is_empty();
        (Some(matched), (!matched).then_some(d))
    } else {
        (None, None)
    };

    let materialize = matches!(opts.mode, Mode::Analyze | Mode::Compare);
    let budget = if materialize { opts.budget_bytes } else { 0 };
    let code = if opts.mode == Mode::Closed {
        gray_basis(inst)?
    } else {
        gray_image(inst, budget)?
    };
    if code.size() != code_size {
        return Err(Error::Inconsistent(format!(
            "Gray image has {} words, distribution implies {code_size}",
            code.size()
        )));
    }

    let self_orthogonal = is_self_orthogonal_exact(&code)?;
    if code
        .words()
        .is_some_and(|w| w.len() <= GRAM_AUDIT_MAX_WORDS)
        && self_orthogonality_audit(&code)? != self_orthogonal
    {
        return Err(Error::Inconsistent(
            "basis and full Gram checks disagree".into(),
        ));
    }

    let exact_minimal = if code.is_materialized() {
        Verdict::Known(is_minimal_exact(&code)?)
    } else {
        Verdict::Skipped
    };
    let warning = (materialize && !code.is_materialized()).then(|| {
        format!(
            "materialization of {} codewords of length {} exceeds budget of {} bytes; exact minimality skipped",
            code.size(),
            code.length(),
            opts.budget_bytes
        )
    });

    let ab = ashikhmin_barg_check(&codeword)?;
    let d = codeword.min_nonzero().ok_or(Error::ZeroCode)?;
    if code.min_distance().is_some_and(|md| md != d) {
        return Err(Error::Inconsistent(format!(
            "Gray image minimum distance {:?} differs from minimum Lee weight {d}",
            code.min_distance()
        )));
    }

    Ok(AnalysisReport {
        m: inst.m(),
        d: inst.d().coords(),
        e: inst.e().coords(),
        f: inst.f().coords(),
        l_length: inst.length(),
        gray_length,
        code_size,
        kernel_size,
        distribution: entries(&codeword),
        message_distribution: opts.message_distribution.then(|| entries(&message)),
        enumerator: enumerator_string(&codeword, gray_length)?,
        params: Params {
            n: gray_length,
            k: code.dimension(),
            d,
        },
        self_orthogonal,
        weights_div4: all_weights_divisible_by_4(&codeword),
        ab_ratio: AbRatio {
            w0: ab.w0,
            w_inf: ab.w_inf,
        },
        ab_minimal: ab.minimal,
        exact_minimal,
        paper_claim_minimal: paper_claim(inst),
        distributions_match,
        diff,
        warning,
    })
}
