//! Closed-form Lee weights: the per-message character-sum formula, the
//! tabulated distribution assembled from subset counts, and the code size.
//!
//! Notation used below, for a support `S`: `s = 2^{|S|}` and
//! `s̄ = 2^m − 2^{|S|} = |Δ_S^c|`. With these, `|L| = d̄·ē·f̄`.

use std::fmt::Write as _;

use crate::code::{Instance, Level, WeightDistribution};
use crate::error::{Error, Result};
use crate::ring::MixedWord;
use crate::simplicial::{eval_complement_at_signs, lemma22_counts, lemma31_counts, SupportSet};

/// Lee weight of `c_a` from the product of three complement character sums:
///
/// `wt_L(c_a) = |L| − ½·A_D(p)·A_E(r)·A_F(q) − ½·A_D(p)·A_E(q+r)·A_F(q)`
///
/// where `A_S(x) = 2^m·δ_{0,x} − 2^{|S|}·χ(supp(x)|S)`.
pub fn lee_weight_formula(inst: &Instance, a: &MixedWord) -> Result<u64> {
    if a.dim() != inst.m() {
        return Err(Error::DimensionMismatch {
            left: a.dim(),
            right: inst.m(),
        });
    }
    let qr = a.q.add(a.r)?;
    let ad = eval_complement_at_signs(inst.d(), a.p);
    let af = eval_complement_at_signs(inst.f(), a.q);
    let first = ad * eval_complement_at_signs(inst.e(), a.r) * af;
    let second = ad * eval_complement_at_signs(inst.e(), qr) * af;
    let twice = 2 * inst.length() as i64 - first - second;
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::Inconsistent(format!("2·wt evaluated to {twice}")));
    }
    Ok((twice / 2) as u64)
}

/// One row of the tabulated distribution before merging.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightRow {
    pub weight: u64,
    pub frequency: u64,
    pub case_labels: Vec<&'static str>,
}

struct Sizes {
    d: i64,
    e: i64,
    f: i64,
    dbar: i64,
    ebar: i64,
    fbar: i64,
}

impl Sizes {
    fn new(inst: &Instance) -> Self {
        let full = 1i64 << inst.m();
        let p = |s: SupportSet| 1i64 << s.size();
        Self {
            d: p(inst.d()),
            e: p(inst.e()),
            f: p(inst.f()),
            dbar: full - p(inst.d()),
            ebar: full - p(inst.e()),
            fbar: full - p(inst.f()),
        }
    }
}

/// The explicitly counted rows of the distribution table, plus the zero row
/// and the residual row at weight `|L|`. Rows are not merged; rows that
/// count no messages are omitted.
pub fn table_rows(inst: &Instance) -> Result<Vec<WeightRow>> {
    let m = inst.m();
    let s = Sizes::new(inst);
    let len = inst.length() as i64;

    let ef = lemma22_counts(inst.e(), inst.f())?;
    let ef_pattern = lemma31_counts(inst.e(), inst.f())?;
    // 2^{m−|D|} − 1: nonzero p disjoint from D
    let p_free = (1u64 << (m - inst.d().size())) - 1;
    let r_free = (1u64 << (m - inst.e().size())) - 1;

    // (label, twice the offset from |L|, frequency)
    let explicit: Vec<(&'static str, i64, u64)> = vec![
        ("f3", 2 * s.dbar * s.e * s.fbar, r_free),
        (
            "f6+f18",
            s.dbar * s.ebar * s.f,
            2 * ef_pattern.meets_first_only,
        ),
        (
            "f7+f19",
            s.dbar * s.ebar * s.f - s.dbar * s.e * s.f,
            2 * ef.nonempty_disjoint_both,
        ),
        ("f13+f14", -(s.dbar * s.e * s.f), ef.t1),
        ("f15", -2 * s.dbar * s.e * s.f, ef.t2),
        ("f21", 2 * s.d * s.ebar * s.fbar, p_free),
        ("f25", -2 * s.d * s.e * s.fbar, p_free * r_free),
        (
            "f32+f56",
            -(s.d * s.ebar * s.f),
            2 * p_free * ef_pattern.meets_first_only,
        ),
        (
            "f33+f57",
            -(s.d * s.ebar * s.f - s.d * s.e * s.f),
            2 * p_free * ef.nonempty_disjoint_both,
        ),
        ("f47+f48", s.d * s.e * s.f, p_free * ef.t1),
        ("f49", 2 * s.d * s.e * s.f, p_free * ef.t2),
    ];

    let mut rows = vec![WeightRow {
        weight: 0,
        frequency: 1,
        case_labels: vec!["f1"],
    }];
    for (label, twice_offset, frequency) in explicit {
        if frequency == 0 {
            continue;
        }
        if twice_offset % 2 != 0 {
            return Err(Error::Inconsistent(format!(
                "row {label} has a fractional weight"
            )));
        }
        let weight = len + twice_offset / 2;
        let weight = u64::try_from(weight)
            .map_err(|_| Error::Inconsistent(format!("row {label} has weight {weight}")))?;
        rows.push(WeightRow {
            weight,
            frequency,
            case_labels: vec![label],
        });
    }

    let accounted: u64 = rows.iter().map(|r| r.frequency).sum();
    let residual = inst.message_count().checked_sub(accounted).ok_or_else(|| {
        Error::Inconsistent(format!(
            "explicit rows account for {accounted} > {} messages",
            inst.message_count()
        ))
    })?;
    rows.push(WeightRow {
        weight: inst.length(),
        frequency: residual,
        case_labels: vec!["rest"],
    });
    Ok(rows)
}

/// Rows merged by evaluated weight, zero-frequency rows dropped.
pub fn merged_rows(inst: &Instance) -> Result<Vec<WeightRow>> {
    let mut merged: Vec<WeightRow> = Vec::new();
    let mut rows = table_rows(inst)?;
    rows.sort_by_key(|r| r.weight);
    for row in rows.into_iter().filter(|r| r.frequency > 0) {
        match merged.last_mut() {
            Some(last) if last.weight == row.weight => {
                last.frequency += row.frequency;
                last.case_labels.extend(row.case_labels);
            }
            _ => merged.push(row),
        }
    }
    Ok(merged)
}

/// `|C_L| = 2^{3m−1}` if `|D| = |E| = m − 1`, else `2^{3m}`.
pub fn code_size_formula(inst: &Instance) -> u64 {
    let m = inst.m();
    if inst.d().size() == m - 1 && inst.e().size() == m - 1 {
        1 << (3 * m - 1)
    } else {
        1 << (3 * m)
    }
}

pub fn kernel_size_formula(inst: &Instance) -> u64 {
    inst.message_count() / code_size_formula(inst)
}

/// `(message-level, codeword-level)` distributions from the table.
pub fn distribution_formula(inst: &Instance) -> Result<(WeightDistribution, WeightDistribution)> {
    let message = WeightDistribution::from_entries(
        Level::Message,
        merged_rows(inst)?
            .into_iter()
            .map(|r| (r.weight, r.frequency)),
    );
    let codeword = message.to_codeword_level(kernel_size_formula(inst))?;
    Ok((message, codeword))
}

/// `Σ freq·X^{N−w}·Y^{w}`, ascending in `w`.
pub fn enumerator_string(dist: &WeightDistribution, gray_length: u64) -> Result<String> {
    let mut terms = Vec::new();
    for (w, c) in dist.iter() {
        if w > gray_length {
            return Err(Error::WeightExceedsLength {
                weight: w,
                gray_length,
            });
        }
        let mut t = String::new();
        if c != 1 {
            write!(t, "{c}").unwrap();
        }
        for (var, exp) in [("X", gray_length - w), ("Y", w)] {
            match exp {
                0 => {}
                1 => t.push_str(var),
                _ => write!(t, "{var}^{exp}").unwrap(),
            }
        }
        if t.is_empty() {
            t.push('1');
        }
        terms.push(t);
    }
    if terms.is_empty() {
        return Ok("0".into());
    }
    Ok(terms.join(" + "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::BitVec;

    fn inst(m: u32, d: &[u32], e: &[u32], f: &[u32]) -> Instance {
        Instance::from_coords(m, d, e, f).unwrap()
    }

    fn word(m: u32, p: u64, q: u64, r: u64) -> MixedWord {
        MixedWord::new(
            BitVec::new(p, m).unwrap(),
            BitVec::new(q, m).unwrap(),
            BitVec::new(r, m).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn weight_formula_examples() {
        let i = inst(3, &[1, 2], &[1, 3], &[2, 3]);
        assert_eq!(lee_weight_formula(&i, &word(3, 0, 0, 0)).unwrap(), 0);
        assert_eq!(lee_weight_formula(&i, &word(3, 0, 0, 0b010)).unwrap(), 128);
        assert_eq!(
            lee_weight_formula(&i, &word(3, 0b100, 0, 0b010)).unwrap(),
            0
        );
    }

    #[test]
    fn example_1_table() {
        let (msg, cw) = distribution_formula(&inst(3, &[1, 2], &[1, 3], &[2, 3])).unwrap();
        assert_eq!(msg.total(), 512);
        assert_eq!(
            cw.iter().collect::<Vec<_>>(),
            vec![(0, 1), (32, 2), (64, 250), (96, 2), (128, 1)]
        );
    }

    #[test]
    fn example_4_table() {
        let (_, cw) = distribution_formula(&inst(4, &[1, 2], &[2, 3], &[3, 4])).unwrap();
        assert_eq!(cw.frequency(1728), 4000);
        assert_eq!(cw.iter().count(), 10);
        assert_eq!(
            enumerator_string(&cw, 3456).unwrap(),
            "X^3456 + 11X^1920Y^1536 + 24X^1824Y^1632 + 6X^1792Y^1664 + 4000X^1728Y^1728 \
             + 36X^1696Y^1760 + 6X^1664Y^1792 + 2X^1536Y^1920 + 4X^1440Y^2016 + 6X^1152Y^2304"
        );
    }

    #[test]
    fn small_table_m2() {
        let (_, cw) = distribution_formula(&inst(2, &[1], &[1], &[1])).unwrap();
        assert_eq!(
            cw.iter().collect::<Vec<_>>(),
            vec![(0, 1), (8, 30), (16, 1)]
        );
        let (_, cw) = distribution_formula(&inst(2, &[1], &[2], &[1])).unwrap();
        assert_eq!(
            cw.iter().collect::<Vec<_>>(),
            vec![(0, 1), (4, 2), (8, 26), (12, 2), (16, 1)]
        );
    }

    #[test]
    fn code_size_examples() {
        assert_eq!(code_size_formula(&inst(3, &[1, 2], &[1, 3], &[1])), 256);
        assert_eq!(code_size_formula(&inst(3, &[1], &[2], &[3])), 512);
        assert_eq!(
            code_size_formula(&inst(4, &[1, 2, 3], &[1, 2, 4], &[1, 3, 4])),
            2048
        );
    }

    #[test]
    fn enumerator_examples() {
        let d = WeightDistribution::from_entries(
            Level::Codeword,
            [(0, 1), (32, 2), (64, 250), (96, 2), (128, 1)],
        );
        assert_eq!(
            enumerator_string(&d, 128).unwrap(),
            "X^128 + 2X^96Y^32 + 250X^64Y^64 + 2X^32Y^96 + Y^128"
        );
        let zero = WeightDistribution::from_entries(Level::Codeword, [(0, 1)]);
        assert_eq!(enumerator_string(&zero, 10).unwrap(), "X^10");
        assert_eq!(enumerator_string(&zero, 0).unwrap(), "1");
        assert_eq!(
            enumerator_string(&d, 100),
            Err(Error::WeightExceedsLength {
                weight: 128,
                gray_length: 100
            })
        );
    }

    #[test]
    fn example_2_enumerator() {
        let i = inst(3, &[1], &[2], &[3]);
        let (_, cw) = distribution_formula(&i).unwrap();
        assert_eq!(
            enumerator_string(&cw, i.gray_length())
                .unwrap()
                .replace(' ', ""),
            "X^432+11X^240Y^192+24X^228Y^204+6X^224Y^208+416X^216Y^216+36X^212Y^220\
             +6X^208Y^224+2X^192Y^240+4X^180Y^252+6X^144Y^288"
        );
    }

    #[test]
    fn merged_rows_keep_labels() {
        let rows = merged_rows(&inst(3, &[1], &[2], &[3])).unwrap();
        let at_192 = rows.iter().find(|r| r.weight == 192).unwrap();
        assert_eq!(at_192.case_labels, vec!["f15", "f25"]);
        assert_eq!(at_192.frequency, 11);
    }
}
