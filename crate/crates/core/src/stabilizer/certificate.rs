use std::fmt::Write as _;

use super::{CodeParams, Distance};

/// Text certificate: headline, provenance, witnesses and notes.
pub fn render_human(p: &CodeParams) -> String {
    let mut out = String::new();
    writeln!(out, "{p}").unwrap();
    match &p.distance {
        Distance::Symmetric(d) => writeln!(out, "  d = {} ({})", d.value, d.status.as_str()).unwrap(),
        Distance::Asymmetric { z, x } => {
            writeln!(out, "  d_z = {} ({})", z.value, z.status.as_str()).unwrap();
            writeln!(out, "  d_x = {} ({})", x.value, x.status.as_str()).unwrap();
        }
    }
    if let Some(c) = p.ebits {
        writeln!(out, "  ebits = {c}").unwrap();
    }
    for (label, w) in &p.witnesses {
        writeln!(out, "  witness {label}: {w}").unwrap();
    }
    writeln!(out, "  provenance: {}", p.provenance.join(" -> ")).unwrap();
    for note in &p.notes {
        writeln!(out, "  note: {note}").unwrap();
    }
    out
}

/// One `key=value` record per line.
pub fn render_kv(p: &CodeParams) -> String {
    let mut out = String::new();
    writeln!(out, "q={}", p.q).unwrap();
    writeln!(out, "n={}", p.n).unwrap();
    writeln!(out, "k={}", p.k).unwrap();
    match &p.distance {
        Distance::Symmetric(d) => writeln!(out, "d={}", d.value).unwrap(),
        Distance::Asymmetric { z, x } => {
            writeln!(out, "d_z={}", z.value).unwrap();
            writeln!(out, "d_z.status={}", z.status.as_str()).unwrap();
            writeln!(out, "d_x={}", x.value).unwrap();
            writeln!(out, "d_x.status={}", x.status.as_str()).unwrap();
        }
    }
    writeln!(out, "d.status={}", p.distance.status().as_str()).unwrap();
    writeln!(out, "pure={}", p.pure.as_str()).unwrap();
    if let Some(c) = p.ebits {
        writeln!(out, "ebits={c}").unwrap();
    }
    for (label, w) in &p.witnesses {
        writeln!(out, "witness.{label}={w}").unwrap();
    }
    writeln!(out, "provenance={}", p.provenance.join(" -> ")).unwrap();
    for note in &p.notes {
        writeln!(out, "note={note}").unwrap();
    }
    out
}
