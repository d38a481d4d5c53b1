//! Exhaustive verification drivers. Each driver enumerates a finite domain,
//! checks every instance, and returns a report plus the minor witnesses it
//! found.

mod cockade_laws;
mod degree_class;
mod exceptional;
pub mod report;
mod theorems;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::minors::{has_family_minor, Family};

pub use cockade_laws::{lemma1, lemma2, lemma3, lemma4};
pub use degree_class::{lemma5, lemma6, lemma7};
pub use exceptional::{
    exceptional_names, lemma10, lemma11, lemma8, lemma9, petersen_five_cycles, qualifies_lemma10,
    Lemma8Options,
};
pub use report::{Counterexample, LemmaReport, LemmaRun, Timing, Verdict, Witness};
pub use theorems::{check_theorem, spot_check_theorem2};

/// Edge count (t-3)n - (t-1)(t-4)/2 above which K_t^= minors are forced.
pub fn threshold(t: usize, n: usize) -> Result<i64> {
    if !(5..=9).contains(&t) {
        return Err(Error::InvalidParameter(format!("threshold supports 5 <= t <= 9, got t={t}")));
    }
    if n + 1 < t {
        return Err(Error::InvalidParameter(format!("threshold needs n >= t - 1, got n={n}, t={t}")));
    }
    let (t, n) = (t as i64, n as i64);
    Ok((t - 3) * n - (t - 1) * (t - 4) / 2)
}

/// Size caps for the exhaustive drivers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Caps {
    /// Largest cockade for the non-edge law.
    pub lemma1_n: usize,
    /// Largest cockade receiving a new vertex.
    pub lemma2_n: usize,
    /// Largest cockade whose vertices are split.
    pub lemma3_n: usize,
    /// Largest enumerated cockade for the edge law.
    pub lemma4_n: usize,
    /// Random cockades for the edge law.
    pub lemma4_samples: usize,
    /// Largest order of the min-degree-6 classes.
    pub degree_n: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            lemma1_n: 13,
            lemma2_n: 12,
            lemma3_n: 11,
            lemma4_n: 21,
            lemma4_samples: 500,
            degree_n: 11,
        }
    }
}

impl Caps {
    /// Applies a single `--cap` value to the lemma it bounds.
    pub fn with_cap(mut self, lemma: u32, cap: usize) -> Result<Self> {
        let (slot, max) = match lemma {
            1 => (&mut self.lemma1_n, 13),
            2 => (&mut self.lemma2_n, 12),
            3 => (&mut self.lemma3_n, 11),
            4 => (&mut self.lemma4_n, 64),
            5..=7 => (&mut self.degree_n, 11),
            _ => {
                return Err(Error::InvalidParameter(format!("lemma {lemma} takes no cap")));
            }
        };
        if cap > max {
            return Err(Error::CapExceeded(format!("lemma {lemma} supports caps up to {max}")));
        }
        *slot = cap;
        Ok(self)
    }
}

/// Runs one of the lemma drivers (lemma 8 has its own entry point).
pub fn verify_lemma(id: u32, caps: &Caps) -> Result<LemmaRun> {
    match id {
        1 => lemma1(caps.lemma1_n),
        2 => lemma2(caps.lemma2_n),
        3 => lemma3(caps.lemma3_n),
        4 => lemma4(caps.lemma4_n, caps.lemma4_samples),
        5 => lemma5(caps.degree_n),
        6 => lemma6(caps.degree_n),
        7 => lemma7(caps.degree_n),
        9 => lemma9(),
        10 => lemma10(),
        11 => lemma11(),
        8 => Err(Error::InvalidParameter("lemma 8 runs through verify_lemma8".into())),
        _ => Err(Error::InvalidParameter(format!("no lemma {id}"))),
    }
}

pub fn verify_lemma8(n: usize, options: &Lemma8Options) -> Result<LemmaRun> {
    lemma8(n, options)
}

/// Outcome of one "must contain a family minor" instance.
pub(crate) enum Check {
    Found(Witness),
    Missing(Counterexample),
}

/// Tests `g` for the family, validating any witness found.
pub(crate) fn expect_family(g: &Graph, family: Family, context: String) -> Check {
    match has_family_minor(g, family) {
        Some(w) => {
            let pattern = family.pattern(w.shared);
            match w.model.validate(g, &pattern) {
                Ok(()) => Check::Found(Witness::new(context, g, &pattern, &w.model)),
                Err(e) => Check::Missing(Counterexample {
                    graph6: crate::graph6::encode(g),
                    context: format!("{context}: invalid witness ({e})"),
                }),
            }
        }
        None => Check::Missing(Counterexample {
            graph6: crate::graph6::encode(g),
            context,
        }),
    }
}

/// Runs `expect_family` over instances in parallel, keeping input order.
pub(crate) fn check_all(
    report: &mut LemmaReport,
    instances: Vec<(Graph, String)>,
    family: Family,
) -> Vec<Witness> {
    let results: Vec<Check> = instances
        .into_par_iter()
        .map(|(g, ctx)| expect_family(&g, family, ctx))
        .collect();
    let mut witnesses = Vec::new();
    for r in results {
        report.instances_checked += 1;
        match r {
            Check::Found(w) => witnesses.push(w),
            Check::Missing(c) => report.counterexamples.push(c),
        }
    }
    witnesses
}

pub(crate) fn timed<F: FnOnce() -> Result<LemmaRun>>(f: F) -> Result<LemmaRun> {
    let start = std::time::Instant::now();
    let mut run = f()?;
    run.report.timing = Timing {
        wall_time_s: start.elapsed().as_secs_f64(),
        jobs: rayon::current_num_threads(),
    };
    Ok(run)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_values() {
        assert_eq!(threshold(9, 8).unwrap(), 28);
        assert_eq!(threshold(9, 10).unwrap(), 40);
        assert_eq!(threshold(8, 8).unwrap(), 26);
        assert_eq!(threshold(5, 5).unwrap(), 8);
        assert_eq!(threshold(6, 5).unwrap(), 10);
        assert!(threshold(4, 5).is_err());
        assert!(threshold(9, 7).is_err());
    }

    #[test]
    fn caps_are_bounded() {
        assert!(Caps::default().with_cap(1, 14).is_err());
        assert_eq!(Caps::default().with_cap(3, 10).unwrap().lemma3_n, 10);
        assert!(Caps::default().with_cap(9, 3).is_err());
        assert!(verify_lemma(12, &Caps::default()).is_err());
    }
}
