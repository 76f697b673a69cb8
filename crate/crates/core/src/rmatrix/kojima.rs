use serde::Serialize;

use super::labels::{labels, RCase, Rep};
use super::table::{BasisChange, RBase, RTable, TwistFunction};
use super::tables::{kojima_reference_text, Vars};
use crate::coeffring::rational_eq;
use crate::error::Result;

/// Knobs of the comparison pipeline.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KojimaOptions {
    /// Negate the all-minus entry (the grading sign).
    pub flip_iv: bool,
    /// Also negate the `(+b,+a,+a,+b)` entries.
    pub flip_iii: bool,
    /// Representative used in the basis change `f(+a, z) = z^a`.
    pub rep: Rep,
}

impl Default for KojimaOptions {
    fn default() -> Self {
        Self {
            flip_iv: true,
            flip_iii: false,
            rep: Rep::One,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KojimaMismatch {
    pub labels: [String; 4],
    pub pipeline: String,
    pub reference: String,
    pub ratio: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KojimaCase {
    pub case: RCase,
    pub reference: &'static str,
    pub entries: usize,
    pub mismatches: usize,
    pub example: Option<KojimaMismatch>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KojimaReport {
    pub n: u32,
    pub options: KojimaOptions,
    pub cases: Vec<KojimaCase>,
    pub pass: bool,
}

/// Gamma ÷ z1^n, then the basis change, then the twist, then the sign flips.
pub fn kojima_pipeline(n: u32, opts: &KojimaOptions) -> Result<RTable> {
    let mut flips = Vec::new();
    if opts.flip_iii {
        flips.push(RCase::III);
    }
    if opts.flip_iv {
        flips.push(RCase::IV);
    }
    Ok(RTable::gamma(n)
        .divide_by_z1n()
        .change_basis(BasisChange::plus_power(opts.rep))
        .twist(TwistFunction::kojima(n))?
        .negate(&flips))
}

/// Compares the transformed Gamma table with the reference table entry by entry.
pub fn kojima_match(n: u32, opts: &KojimaOptions) -> Result<KojimaReport> {
    let vars = Vars::pair();
    let pipeline = kojima_pipeline(n, opts)?;
    let reference = RTable::new(RBase::Kojima, n);
    let mut cases: Vec<KojimaCase> = RCase::ALL
        .iter()
        .map(|&case| KojimaCase {
            case,
            reference: kojima_reference_text(case),
            entries: 0,
            mismatches: 0,
            example: None,
        })
        .collect();
    let ls = labels(n);
    for &a in &ls {
        for &b in &ls {
            for &c in &ls {
                for &d in &ls {
                    let Some(case) = reference.case_of(a, b, c, d) else {
                        continue;
                    };
                    let slot = &mut cases[case as usize];
                    slot.entries += 1;
                    let p = pipeline.weight(a, b, c, d, &vars);
                    let r = reference.weight(a, b, c, d, &vars);
                    if !rational_eq(&p, &r)? {
                        slot.mismatches += 1;
                        if slot.example.is_none() {
                            let ratio = if r.is_zero() {
                                "undefined".to_string()
                            } else {
                                p.checked_div(&r)?.simplified().to_string()
                            };
                            slot.example = Some(KojimaMismatch {
                                labels: [a, b, c, d].map(|x| x.to_string()),
                                pipeline: p.simplified().to_string(),
                                reference: r.simplified().to_string(),
                                ratio,
                            });
                        }
                    }
                }
            }
        }
    }
    let pass = cases.iter().all(|c| c.mismatches == 0);
    Ok(KojimaReport {
        n,
        options: *opts,
        cases,
        pass,
    })
}
