use std::io::Write;

use anyhow::Result;

use leecode_core::closed_form::enumerator_string;
use leecode_core::code::Level;
use leecode_core::report::{AnalysisOptions, AnalysisReport, Mode, Verdict, WeightEntry};
use leecode_core::WeightDistribution;

use crate::claim_str;

fn coords(c: &[u32]) -> String {
    if c.is_empty() {
        "none".to_string()
    } else {
        c.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

fn verdict(v: Verdict) -> &'static str {
    match v {
        Verdict::Known(true) => "true",
        Verdict::Known(false) => "false",
        Verdict::Skipped => "skipped",
    }
}

fn enumerator_of(entries: &[WeightEntry], gray_length: u64) -> Result<String> {
    let dist = WeightDistribution::from_entries(
        Level::Message,
        entries.iter().map(|e| (e.weight, e.frequency)),
    );
    Ok(enumerator_string(&dist, gray_length)?)
}

pub fn write_text(w: &mut impl Write, r: &AnalysisReport) -> Result<()> {
    writeln!(
        w,
        "m = {}, D = {{{}}}, E = {{{}}}, F = {{{}}}",
        r.m,
        coords(&r.d),
        coords(&r.e),
        coords(&r.f)
    )?;
    writeln!(w, "|L| = {}, Gray length = {}", r.l_length, r.gray_length)?;
    writeln!(
        w,
        "|C_L| = {}, kernel size = {}",
        r.code_size, r.kernel_size
    )?;
    writeln!(w, "weight distribution:")?;
    for e in &r.distribution {
        writeln!(w, "  {:>8}  {}", e.weight, e.frequency)?;
    }
    if let Some(msg) = &r.message_distribution {
        writeln!(w, "message weight distribution:")?;
        for e in msg {
            writeln!(w, "  {:>8}  {}", e.weight, e.frequency)?;
        }
    }
    writeln!(w, "enumerator: {}", r.enumerator)?;
    writeln!(
        w,
        "Gray image: [{}, {}, {}]",
        r.params.n, r.params.k, r.params.d
    )?;
    writeln!(w, "self-orthogonal: {}", r.self_orthogonal)?;
    writeln!(w, "weights divisible by 4: {}", r.weights_div4)?;
    writeln!(
        w,
        "w0/w_inf = {}/{}, minimal by ratio test: {}",
        r.ab_ratio.w0, r.ab_ratio.w_inf, r.ab_minimal
    )?;
    writeln!(w, "minimal (exact): {}", verdict(r.exact_minimal))?;
    writeln!(
        w,
        "minimal (known result): {}",
        claim_str(r.paper_claim_minimal)
    )?;
    if let Some(m) = r.distributions_match {
        writeln!(w, "distributions match: {m}")?;
    }
    for d in r.diff.iter().flatten() {
        writeln!(
            w,
            "  weight {}: brute {} closed {}",
            d.weight, d.brute, d.closed
        )?;
    }
    if let Some(warning) = &r.warning {
        writeln!(w, "warning: {warning}")?;
    }
    Ok(())
}

pub fn write_scan_line(w: &mut impl Write, r: &AnalysisReport) -> Result<()> {
    write!(
        w,
        "D={} E={} F={} [{},{},{}] so={} min={} claim={}",
        coords(&r.d),
        coords(&r.e),
        coords(&r.f),
        r.params.n,
        r.params.k,
        r.params.d,
        r.self_orthogonal,
        verdict(r.exact_minimal),
        claim_str(r.paper_claim_minimal),
    )?;
    if let Some(m) = r.distributions_match {
        write!(w, " match={m}")?;
    }
    writeln!(w)?;
    Ok(())
}

/// CSV rows with one column per report key. Rows are buffered and handed
/// back through [`CsvRows::take`].
pub struct CsvRows {
    buf: Vec<u8>,
    message_distribution: bool,
    compare: bool,
}

impl CsvRows {
    pub fn new(opts: &AnalysisOptions) -> Result<Self> {
        let mut rows = Self {
            buf: Vec::new(),
            message_distribution: opts.message_distribution,
            compare: opts.mode == Mode::Compare,
        };
        let mut header = vec![
            "m",
            "D",
            "E",
            "F",
            "L_length",
            "gray_length",
            "code_size",
            "kernel_size",
            "distribution",
        ];
        if rows.message_distribution {
            header.push("message_distribution");
        }
        header.extend([
            "enumerator",
            "params",
            "self_orthogonal",
            "weights_div4",
            "ab_ratio",
            "ab_minimal",
            "exact_minimal",
            "paper_claim_minimal",
        ]);
        if rows.compare {
            header.extend(["distributions_match", "diff"]);
        }
        header.push("warning");
        rows.record(&header)?;
        Ok(rows)
    }

    pub fn write(&mut self, r: &AnalysisReport) -> Result<()> {
        let mut row = vec![
            r.m.to_string(),
            coords(&r.d),
            coords(&r.e),
            coords(&r.f),
            r.l_length.to_string(),
            r.gray_length.to_string(),
            r.code_size.to_string(),
            r.kernel_size.to_string(),
            enumerator_of(&r.distribution, r.gray_length)?,
        ];
        if self.message_distribution {
            row.push(match &r.message_distribution {
                Some(msg) => enumerator_of(msg, r.gray_length)?,
                None => String::new(),
            });
        }
        row.extend([
            r.enumerator.clone(),
            format!("[{},{},{}]", r.params.n, r.params.k, r.params.d),
            r.self_orthogonal.to_string(),
            r.weights_div4.to_string(),
            format!("{}/{}", r.ab_ratio.w0, r.ab_ratio.w_inf),
            r.ab_minimal.to_string(),
            verdict(r.exact_minimal).to_string(),
            claim_str(r.paper_claim_minimal).to_string(),
        ]);
        if self.compare {
            row.push(
                r.distributions_match
                    .map_or(String::new(), |m| m.to_string()),
            );
            row.push(
                r.diff
                    .iter()
                    .flatten()
                    .map(|d| format!("{}:{}/{}", d.weight, d.brute, d.closed))
                    .collect::<Vec<_>>()
                    .join(";"),
            );
        }
        row.push(r.warning.clone().unwrap_or_default());
        self.record(&row)
    }

    fn record<T: AsRef<[u8]>>(&mut self, fields: &[T]) -> Result<()> {
        let mut writer = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(&mut self.buf);
        writer.write_record(fields)?;
        writer.flush()?;
        Ok(())
    }

    /// Everything written since the last call.
    pub fn take(&mut self) -> Vec<u8> {
        std::mem::take(&mut self.buf)
    }
}
