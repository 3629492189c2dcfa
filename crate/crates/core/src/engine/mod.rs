//! Polynomial families and the exhaustive verification harness.
//!
//! Every check is registered under a stable identifier and runs over a range
//! of sizes `n`. A check never trusts another module's theorem: both sides
//! of each identity are computed independently and compared exactly.

mod actions_checks;
mod bijection_checks;
mod families;
mod series_checks;
mod theorem_checks;

use std::fmt;
use std::time::Instant;

use serde::Serialize;

pub use families::{
    basic_eulerian, basic_eulerian_desrix, cyc_gamma, cyc_gamma_direct_poly, derangement_cycle_poly,
    derangement_des_poly, gamma_basic, gamma_derangement, gamma_poly, gamma_tilde_poly, rix_free_poly,
    sw3_gamma, tally_over,
};
pub use series_checks::{gamma_tilde_recurrence, gamma_recurrence, recurrence2};

use crate::error::{Error, Result};
use crate::perm::{par_fold, Permutation};
use crate::qpoly::MPoly;

/// Most witnesses kept per report; the rest are summarized in one line.
pub const WITNESS_CAP: usize = 20;

/// Counterexamples collected while running a check.
#[derive(Clone, Debug, Default)]
pub struct Witnesses {
    items: Vec<String>,
    suppressed: usize,
}

impl Witnesses {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, w: impl Into<String>) {
        if self.items.len() < WITNESS_CAP {
            self.items.push(w.into());
        } else {
            self.suppressed += 1;
        }
    }

    /// Records `describe()` unless `ok`.
    pub fn require(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        if !ok {
            self.push(describe());
        }
    }

    /// Records a mismatch between two displayable values.
    pub fn require_eq<T: PartialEq + fmt::Display>(&mut self, what: impl fmt::Display, left: &T, right: &T) {
        if left != right {
            self.push(format!("{what}: {left} != {right}"));
        }
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn len(&self) -> usize {
        self.items.len() + self.suppressed
    }

    /// Concatenation, keeping `self`'s witnesses first.
    pub fn merge(mut self, other: Witnesses) -> Witnesses {
        for w in other.items {
            self.push(w);
        }
        self.suppressed += other.suppressed;
        self
    }

    pub fn into_vec(self) -> Vec<String> {
        let mut out = self.items;
        if self.suppressed > 0 {
            out.push(format!("... and {} more", self.suppressed));
        }
        out
    }
}

const DIFF_PREVIEW: usize = 160;

/// Records a witness showing (a prefix of) `left − right` when they differ.
pub(crate) fn poly_eq(w: &mut Witnesses, what: impl fmt::Display, left: &MPoly, right: &MPoly) {
    if left != right {
        let mut diff = (left - right).to_string();
        if diff.len() > DIFF_PREVIEW {
            let cut = (0..=DIFF_PREVIEW).rev().find(|&i| diff.is_char_boundary(i)).unwrap_or(0);
            diff.truncate(cut);
            diff.push_str("...");
        }
        w.push(format!("{what}: difference {diff}"));
    }
}

/// Runs `visit` on every permutation of `[n]` in parallel, appending the
/// witnesses in lexicographic order of the permutations that produced them.
pub(crate) fn scan<F>(n: usize, w: &mut Witnesses, visit: F) -> Result<()>
where
    F: Fn(&Permutation, &mut Witnesses) + Sync + Send,
{
    let found = par_fold(n, Witnesses::new, |acc, p| visit(p, acc), Witnesses::merge)?;
    *w = std::mem::take(w).merge(found);
    Ok(())
}

/// Outcome of one registered check over a range of sizes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    /// Inclusive `[lo, hi]`; `lo > hi` means no size was in range.
    pub n_range: [usize; 2],
    pub passed: bool,
    pub witnesses: Vec<String>,
    pub elapsed_ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

type CheckFn = fn(usize, &mut Witnesses) -> Result<()>;

#[derive(Clone, Copy, Debug)]
enum Sizes {
    /// Every `n` from `from` up to the smaller of `cap` and the caller's ceiling.
    Range { from: usize, cap: usize },
    /// A single size, independent of the ceiling.
    Fixed(usize),
}

/// A registered identity or property.
#[derive(Clone, Copy)]
pub struct CheckSpec {
    pub id: &'static str,
    pub summary: &'static str,
    sizes: Sizes,
    run: CheckFn,
    note: Option<&'static str>,
}

impl fmt::Debug for CheckSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckSpec").field("id", &self.id).field("sizes", &self.sizes).finish()
    }
}

const fn range(from: usize, cap: usize) -> Sizes {
    Sizes::Range { from, cap }
}

macro_rules! check {
    ($id:literal, $summary:literal, $sizes:expr, $run:path) => {
        CheckSpec { id: $id, summary: $summary, sizes: $sizes, run: $run, note: None }
    };
    ($id:literal, $summary:literal, $sizes:expr, $run:path, note = $note:expr) => {
        CheckSpec { id: $id, summary: $summary, sizes: $sizes, run: $run, note: Some($note) }
    };
}

/// Every check, in canonical order.
pub const REGISTRY: &[CheckSpec] = &[
    check!("thm-1.1", "gamma expansion of the classical Eulerian polynomial with |D(n,k)| coefficients", range(1, 12), theorem_checks::thm_1_1),
    check!("thm-1.2", "cyc-refined derangement polynomial expands over E(n,k) with symbolic beta", range(1, 12), theorem_checks::thm_1_2),
    check!("thm-1.3", "A(-1,1,q) and A(-1,0,q) against signed alternating inversion sums", range(1, 12), theorem_checks::thm_1_3),
    check!("thm-1.4", "A(t,1,q) gamma coefficients equal inv sums over D(n,k)", range(1, 12), theorem_checks::thm_1_4),
    check!("thm-1.5", "A(t,0,q) gamma coefficients equal inv sums over D~(n,k)", range(1, 12), theorem_checks::thm_1_5),
    check!("lemma-1.7", "(des, rix, ai) and (exc, fix, maj - exc) are equidistributed", range(0, 12), theorem_checks::lemma_1_7),
    check!("lemma-2.1", "MFS generators: involutions, commuting, ai-invariant, orbits with one dd-free element", range(1, 12), actions_checks::lemma_2_1),
    check!("lemma-2.2", "ai <= inv, with equality without double descents", range(0, 12), actions_checks::lemma_2_2),
    check!("prop-3.2", "rix-factorization chain, hook types and rix = |RIX|", range(1, 12), bijection_checks::prop_3_2),
    check!("prop-3.4", "rix-factorization is unique among all hook factorizations", range(1, 8), bijection_checks::prop_3_4),
    check!("prop-3.5", "Phi is a bijection sending (des, RIX) to (exc, FIX) and R0(n,k) onto E(n,k)", range(1, 12), bijection_checks::prop_3_5),
    check!("f-bijection", "f maps R0(n,k) bijectively onto D~(n,k)", range(1, 12), bijection_checks::f_bijection),
    check!("lemma-4.1", "restricted action preserves beta1, RIX, factor letter sets and lyc", range(1, 12), actions_checks::lemma_4_1),
    check!("lemma-4.2", "restricted orbits over R(n): one dd = 1 element each, gamma expansion of ai and lyc", range(1, 12), actions_checks::lemma_4_2),
    check!("prop-5.1", "generating functions of A, Gamma and Gamma~ as cleared truncated identities", range(0, 12), series_checks::prop_5_1),
    check!(
        "prop-5.2",
        "recurrences for Gamma and Gamma~ against enumeration",
        range(1, 12),
        series_checks::prop_5_2,
        note = "Gamma~ verified as Gamma~(n+1) = y*Gamma(n) + y*sum_{i=2}^{n-1} q^i [n,i]_q Gamma~(i) Gamma(n-i); the variant without the leading y on Gamma(n) is refuted at n+1 = 2"
    ),
    check!("eq-recurrence2", "recurrence for A(t,r,q) with symbolic r", range(1, 12), series_checks::recurrence2_check),
    check!("eq-qmul", "q-binomial as the inv generating function of two-letter shuffles", range(0, 12), series_checks::qmul),
    check!("eq-fix-maj", "fixed-point refinement of (exc, maj - exc)", range(0, 12), series_checks::fix_maj),
    check!("eq-cycle-bis", "fixed-point refinement of the cyc gamma expansion", range(1, 12), series_checks::cycle_bis),
    check!("eq-exp-fixed", "fixed-point refinement of the q-derangement gamma expansion", range(1, 12), series_checks::exp_fixed),
    check!(
        "eq-sw3",
        "des-refined q-derangement polynomial has gamma coefficients in N[p,q]",
        range(1, 12),
        series_checks::sw3,
        note = "expanded about center n; gamma~(n,0)(p,q) = 0 for every n >= 1 tested"
    ),
    check!("remark-1.8", "inv and imaj are equidistributed on every descent class", range(0, 12), theorem_checks::remark_1_8),
    check!("remark-3.7-negative", "(FIX, maj) and (RIX, aid) are not equidistributed on S3", Sizes::Fixed(3), bijection_checks::remark_3_7),
    check!("table-1", "f and Phi on D~(4,2), against the printed five-row table", Sizes::Fixed(4), bijection_checks::table_1),
];

pub fn check_ids() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|c| c.id)
}

pub fn lookup(id: &str) -> Result<&'static CheckSpec> {
    REGISTRY.iter().find(|c| c.id == id).ok_or_else(|| Error::UnknownCheck(id.to_string()))
}

impl CheckSpec {
    /// Sizes this check runs at under the ceiling `max_n`.
    pub fn sizes(&self, max_n: usize) -> (usize, usize) {
        match self.sizes {
            Sizes::Range { from, cap } => (from, cap.min(max_n)),
            Sizes::Fixed(n) => (n, n),
        }
    }

    /// Runs every size in `lo..=hi`, collecting witnesses. Errors from the
    /// underlying computations are recorded as witnesses, not propagated.
    pub fn run_range(&self, lo: usize, hi: usize) -> VerificationReport {
        let start = Instant::now();
        let mut witnesses = Witnesses::new();
        for n in lo..=hi {
            if let Err(e) = (self.run)(n, &mut witnesses) {
                witnesses.push(format!("n={n}: {e}"));
            }
        }
        let passed = witnesses.is_empty();
        VerificationReport {
            check_id: self.id.to_string(),
            n_range: [lo, hi],
            passed,
            witnesses: witnesses.into_vec(),
            elapsed_ms: start.elapsed().as_millis() as u64,
            note: self.note.map(str::to_string),
        }
    }
}

/// Runs `id` for every size allowed by the ceiling `max_n`.
pub fn run_check(id: &str, max_n: usize) -> Result<VerificationReport> {
    let spec = lookup(id)?;
    let (lo, hi) = spec.sizes(max_n);
    Ok(spec.run_range(lo, hi))
}

/// Runs `id` at the single size `n`.
pub fn run_check_at(id: &str, n: usize) -> Result<VerificationReport> {
    Ok(lookup(id)?.run_range(n, n))
}

fn single(id: &str, n: usize) -> VerificationReport {
    run_check_at(id, n).expect("registered id")
}

/// The four alternating-sum identities at `t = −1`, at size `n`.
pub fn foata_han_check(n: usize) -> VerificationReport {
    single("thm-1.3", n)
}

/// The `Γ`, `Γ̃` and `Aₙ(t, r, q)` recurrences for every target size up to `n_max`.
pub fn gamma_recurrence_check(n_max: usize) -> VerificationReport {
    let mut a = lookup("prop-5.2").expect("registered").run_range(1, n_max);
    let b = lookup("eq-recurrence2").expect("registered").run_range(1, n_max);
    a.check_id = "prop-5.2+eq-recurrence2".into();
    a.passed &= b.passed;
    a.witnesses.extend(b.witnesses);
    a.elapsed_ms += b.elapsed_ms;
    a
}

/// The three cleared generating-function identities through order `z^order`.
pub fn generating_function_check(order: usize) -> VerificationReport {
    lookup("prop-5.1").expect("registered").run_range(0, order)
}

/// `(fix-maj)`, `(cycle-bis)` and `(exp:fixed)` at size `n`, for every `j`.
pub fn fixed_point_refinement_check(n: usize) -> VerificationReport {
    let mut out = single("eq-fix-maj", n);
    for id in ["eq-cycle-bis", "eq-exp-fixed"] {
        let r = single(id, n);
        out.passed &= r.passed;
        out.witnesses.extend(r.witnesses);
        out.elapsed_ms += r.elapsed_ms;
    }
    out.check_id = "eq-fix-maj+eq-cycle-bis+eq-exp-fixed".into();
    out
}

/// Nonnegativity and `p = 1` specialization of the des-refined expansion at size `n`.
pub fn sw3_positivity_check(n: usize) -> VerificationReport {
    single("eq-sw3", n)
}
