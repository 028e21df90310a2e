//! Human-readable rendering of results. The machine format is the serde form of
//! the result types, wrapped by the CLI.

use std::fmt::Write;

use crate::hull::{HullResult, HullStatus};
use crate::radius::{RadiusKind, RadiusResult};
use crate::regularity::{ReducedResult, RegularityVerdict, Status, SufficientResult, Witness};
use crate::scalar::{format_significant, Interval, Rational};

/// Exit code for a verdict: 0 regular, 2 singular, 3 undecided.
pub fn exit_code(status: Status) -> i32 {
    match status {
        Status::Regular => 0,
        Status::Singular => 2,
        Status::Unknown => 3,
    }
}

pub fn status_name(status: Status) -> &'static str {
    match status {
        Status::Regular => "Regular",
        Status::Singular => "Singular",
        Status::Unknown => "Unknown",
    }
}

/// Exact value of a degenerate interval, otherwise `~` and its rounded midpoint.
pub fn interval_text(iv: &Interval, digits: usize) -> String {
    if iv.is_degenerate() {
        iv.lo().to_string()
    } else {
        format!("~{}", format_significant(&iv.midpoint(), digits))
    }
}

/// Decimal rendering of an enclosure: the midpoint when it is narrow, both
/// endpoints otherwise.
pub fn decimal_text(iv: &Interval, digits: usize) -> String {
    let lo = format_significant(iv.lo(), digits);
    let hi = format_significant(iv.hi(), digits);
    if lo == hi {
        lo
    } else {
        let mid = format_significant(&iv.midpoint(), digits);
        if mid == lo || mid == hi {
            mid
        } else {
            format!("[{lo}, {hi}]")
        }
    }
}

pub fn vector_text(v: &[Interval], digits: usize) -> String {
    let parts: Vec<String> = v.iter().map(|iv| interval_text(iv, digits)).collect();
    format!("({})", parts.join(", "))
}

pub fn rationals_text(v: &[Rational]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}

pub fn witness_text(w: &Witness, digits: usize) -> String {
    let point = vector_text(&w.point, digits);
    match (&w.key, w.whole_slice) {
        (None, _) => format!("center: p = {point}"),
        (Some(key), true) => format!("{key}: whole slice singular, e.g. p = {point}"),
        (Some(key), false) => format!("{key}: p = {point}"),
    }
}

pub fn verdict_text(v: &RegularityVerdict, digits: usize) -> String {
    let mut out = String::new();
    if v.center_singular {
        let _ = writeln!(out, "Singular, center matrix is singular");
    } else {
        let roots: usize = v.slices.iter().map(|s| s.roots.unwrap_or(0)).sum();
        let _ = writeln!(
            out,
            "{}, {} slices, {} roots",
            status_name(v.status),
            v.slices.len(),
            roots
        );
        for s in &v.slices {
            let roots = match s.roots {
                Some(r) => format!("{r} roots"),
                None => "identically zero".to_string(),
            };
            let _ = writeln!(out, "  {}: det = {} ({roots})", s.key, s.det);
        }
    }
    for w in &v.witnesses {
        let _ = writeln!(out, "witness {}", witness_text(w, digits));
    }
    out
}

pub fn sufficient_text(s: &SufficientResult, digits: usize) -> String {
    format!(
        "rho = {} ({})\n",
        decimal_text(&s.rho, digits),
        if s.holds { "< 1, Regular" } else { ">= 1, inconclusive" }
    )
}

pub fn reduced_text(r: &ReducedResult, digits: usize) -> String {
    let mut out = String::new();
    let max = r
        .max
        .as_ref()
        .map_or_else(|| "undefined".to_string(), |m| decimal_text(m, digits));
    let _ = writeln!(
        out,
        "{}, reduced test with t = {}, {} slices, max rho = {max}",
        status_name(r.status),
        r.subset_size,
        r.slices.len()
    );
    for s in &r.slices {
        let rho = s
            .rho
            .as_ref()
            .map_or_else(|| "singular center".to_string(), |v| decimal_text(v, digits));
        let _ = writeln!(out, "  {}: rho = {rho}", s.key);
    }
    out
}

pub fn hull_text(h: &HullResult, digits: usize) -> String {
    let mut out = String::new();
    match &h.status {
        HullStatus::SingularityReport(w) => {
            let _ = writeln!(out, "Singular, the solution set is unbounded");
            let _ = writeln!(out, "witness {}", witness_text(w, digits));
        }
        HullStatus::Hull => {
            let _ = writeln!(out, "Hull, {} range computations", h.range_calls);
            for (i, (iv, at)) in h.hull.iter().zip(&h.attaining).enumerate() {
                let _ = writeln!(
                    out,
                    "  x{} in [{}, {}]  (min on {}, max on {})",
                    i + 1,
                    format_significant(iv.lo(), digits),
                    format_significant(iv.hi(), digits),
                    at.lower.key,
                    at.upper.key
                );
            }
        }
    }
    out
}

pub fn radius_text(r: &RadiusResult, digits: usize) -> String {
    let mut out = String::new();
    match &r.kind {
        RadiusKind::Zero => {
            let center = r.center.as_deref().map(rationals_text).unwrap_or_default();
            let _ = writeln!(out, "r* = 0 (center matrix is singular at p = {center})");
        }
        RadiusKind::Infinite => {
            let _ = writeln!(out, "r* = inf");
        }
        RadiusKind::Finite(v) => {
            let _ = writeln!(out, "r* = {}", decimal_text(v, digits));
            if let Some(w) = &r.witness {
                let _ = writeln!(
                    out,
                    "attained on {} at t = {}, singular at p = {}{}",
                    w.key,
                    format_significant(&w.t, digits),
                    vector_text(&w.point, digits),
                    if w.validated { "" } else { " (not validated)" }
                );
            }
        }
    }
    if !r.certified {
        let _ = writeln!(out, "note: the eigenvalue maximum was located numerically on some slice");
    }
    out
}
