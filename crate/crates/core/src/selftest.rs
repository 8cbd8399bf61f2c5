//! The nine exhaustive acceptance checks, parameterized by sweep bounds.
//!
//! Each check returns a [`CriterionResult`] listing every failing cell by a
//! descriptive statement name and its parameters.

use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::coweights::{
    aut_dim, aut_dim_literal, b, b_doubled_closed, cfl_dim, cfl_dim_literal, interleave,
    is_interleaved, lemma443_margin, merge_type, special_transposition_chain, verify_eq40,
    Partition,
};
use crate::flagmod::{
    aut_count_brute, aut_order_poly, cfl_count_brute, cfl_count_poly, collided_fiber_mass,
    fiber_mass,
};
use crate::levi::{is_antistandard, sweep_a12, BlockLevi};
use crate::rsorbits::orbit_row;
use crate::schur::{verify_index_reversal, verify_lemma242};
use crate::stratcomb::{
    enumerate_c_pairs, invariants_dim, invariants_dim_closed, strata_for, verify_induced_iso,
    Involution, Subset,
};
use crate::{Error, Result};

/// Sweep sizes; the defaults are the acceptance sizes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub schur_n: usize,
    pub schur_dp: u32,
    pub margin_size: u32,
    pub flag_size: u32,
    pub aut_size: u32,
    pub collided_dp: u32,
    pub ind_total: usize,
    pub ind_r: u64,
    pub orbit_q2: usize,
    pub orbit_q3: usize,
    pub levi_n: usize,
    pub levi_lambda: i64,
    pub levi_nu: i64,
    pub audit_n: i64,
    pub audit_d: i64,
    pub audit_g: i64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            schur_n: 3,
            schur_dp: 4,
            margin_size: 5,
            flag_size: 5,
            aut_size: 4,
            collided_dp: 4,
            ind_total: 6,
            ind_r: 4,
            orbit_q2: 4,
            orbit_q3: 3,
            levi_n: 4,
            levi_lambda: 2,
            levi_nu: 2,
            audit_n: 4,
            audit_d: 5,
            audit_g: 3,
        }
    }
}

impl Bounds {
    pub const KEYS: [&'static str; 16] = [
        "schur_n",
        "schur_dp",
        "margin_size",
        "flag_size",
        "aut_size",
        "collided_dp",
        "ind_total",
        "ind_r",
        "orbit_q2",
        "orbit_q3",
        "levi_n",
        "levi_lambda",
        "levi_nu",
        "audit_n",
        "audit_d",
        "audit_g",
    ];

    /// Applies a `key=value` override.
    pub fn set(&mut self, assignment: &str) -> Result<()> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got `{assignment}`")))?;
        fn num<T: FromStr>(v: &str) -> Result<T> {
            v.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad bound value `{v}`")))
        }
        match key.trim() {
            "schur_n" => self.schur_n = num(value)?,
            "schur_dp" => self.schur_dp = num(value)?,
            "margin_size" => self.margin_size = num(value)?,
            "flag_size" => self.flag_size = num(value)?,
            "aut_size" => self.aut_size = num(value)?,
            "collided_dp" => self.collided_dp = num(value)?,
            "ind_total" => self.ind_total = num(value)?,
            "ind_r" => self.ind_r = num(value)?,
            "orbit_q2" => self.orbit_q2 = num(value)?,
            "orbit_q3" => self.orbit_q3 = num(value)?,
            "levi_n" => self.levi_n = num(value)?,
            "levi_lambda" => self.levi_lambda = num(value)?,
            "levi_nu" => self.levi_nu = num(value)?,
            "audit_n" => self.audit_n = num(value)?,
            "audit_d" => self.audit_d = num(value)?,
            "audit_g" => self.audit_g = num(value)?,
            other => {
                return Err(Error::Parse(format!(
                    "unknown bound `{other}`; known: {}",
                    Self::KEYS.join(", ")
                )))
            }
        }
        Ok(())
    }

    /// Keys set above their defaults, which may take much longer to run.
    pub fn raised(&self) -> Vec<&'static str> {
        let d = Bounds::default();
        let pairs: [(&str, bool); 16] = [
            ("schur_n", self.schur_n > d.schur_n),
            ("schur_dp", self.schur_dp > d.schur_dp),
            ("margin_size", self.margin_size > d.margin_size),
            ("flag_size", self.flag_size > d.flag_size),
            ("aut_size", self.aut_size > d.aut_size),
            ("collided_dp", self.collided_dp > d.collided_dp),
            ("ind_total", self.ind_total > d.ind_total),
            ("ind_r", self.ind_r > d.ind_r),
            ("orbit_q2", self.orbit_q2 > d.orbit_q2),
            ("orbit_q3", self.orbit_q3 > d.orbit_q3),
            ("levi_n", self.levi_n > d.levi_n),
            ("levi_lambda", self.levi_lambda > d.levi_lambda),
            ("levi_nu", self.levi_nu > d.levi_nu),
            ("audit_n", self.audit_n > d.audit_n),
            ("audit_d", self.audit_d > d.audit_d),
            ("audit_g", self.audit_g > d.audit_g),
        ];
        pairs.into_iter().filter(|p| p.1).map(|p| p.0).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub checked: usize,
    pub failures: Vec<String>,
    #[serde(skip)]
    pub seconds: f64,
}

struct Tally {
    checked: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, failure: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(failure());
        }
    }

    fn check_result(&mut self, r: Result<bool>, label: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, label),
            Err(e) => self.check(false, || format!("{}: error {e}", label())),
        }
    }
}

fn timed(id: u8, name: &'static str, body: impl FnOnce(&mut Tally)) -> CriterionResult {
    let start = Instant::now();
    let mut tally = Tally::new();
    body(&mut tally);
    CriterionResult {
        id,
        name,
        passed: tally.failures.is_empty(),
        checked: tally.checked,
        failures: tally.failures,
        seconds: start.elapsed().as_secs_f64(),
    }
}

fn partitions_up_to(max: u32) -> Vec<Partition> {
    (0..=max).flat_map(Partition::all_of).collect()
}

pub const NAMES: [&str; 9] = [
    "Schur decomposition of Sym^d(wedge^2 V) x Sym^(d'-d) V is multiplicity free",
    "flag-stack dimension bound, equality iff interleaved",
    "flag and automorphism counts agree with brute force",
    "collided fiber mass has degree -d' and leading coefficient |E|",
    "(2,2) disjoint condition-(C) pairs and their strata",
    "Ind_E is induced from the pair-sign character; invariant dimensions",
    "K-orbits on flags are counted by bar_E and its dual",
    "antistandard Levi inequality and its equality case",
    "dimension identity audits and index reversal",
];

pub fn criterion_1(b: &Bounds) -> CriterionResult {
    timed(1, NAMES[0], |t| {
        let cells: Vec<(usize, u32, u32)> = (1..=b.schur_n)
            .flat_map(|n| (0..=b.schur_dp).flat_map(move |dp| (0..=dp).map(move |d| (n, d, dp))))
            .collect();
        let results: Vec<_> = cells
            .par_iter()
            .map(|&(n, d, dp)| (n, d, dp, verify_lemma242(n, d, dp)))
            .collect();
        for (n, d, dp, r) in results {
            t.check_result(r, || format!("{}: n={n} d={d} d'={dp}", NAMES[0]));
        }
    })
}

pub fn criterion_2(b: &Bounds) -> CriterionResult {
    timed(2, NAMES[1], |t| {
        let parts = partitions_up_to(b.margin_size);
        for mu in &parts {
            t.check(cfl_dim(mu) == cfl_dim_literal(mu) && aut_dim(mu) == aut_dim_literal(mu), || {
                format!("flag and automorphism dimension formulas: mu={mu}")
            });
            for mu_p in &parts {
                let label = || format!("{}: mu={mu} mu'={mu_p}", NAMES[1]);
                let m = lemma443_margin(mu, mu_p);
                let interleaved = is_interleaved(mu, mu_p);
                t.check(m.margin <= 0 && m.equality == interleaved, label);
                let chain = special_transposition_chain(&interleave(mu, mu_p, 0));
                t.check(
                    chain.as_ref().is_ok_and(|c| c.gap == -m.margin && c.eta == merge_type(mu, mu_p)),
                    || format!("special-transposition gap equals minus the margin: mu={mu} mu'={mu_p}"),
                );
                let degree = fiber_mass(mu, mu_p).q_degree();
                t.check(degree == Some(m.margin - i64::from(mu_p.size())), || {
                    format!("fiber mass q-degree equals margin - d': mu={mu} mu'={mu_p} degree={degree:?}")
                });
            }
        }
    })
}

pub fn criterion_3(b: &Bounds) -> CriterionResult {
    timed(3, NAMES[2], |t| {
        for mu in partitions_up_to(b.flag_size) {
            let brute = cfl_count_brute(&mu, 2).map(|c| c as i128);
            let poly = cfl_count_poly(&mu).eval(2);
            t.check(brute == Ok(poly), || {
                format!("complete-flag count at q=2: mu={mu} poly={poly} brute={brute:?}")
            });
        }
        for mu in partitions_up_to(b.aut_size) {
            for q in [2u32, 3] {
                let brute = aut_count_brute(&mu, q).map(|c| c as i128);
                let poly = aut_order_poly(&mu).eval(i128::from(q));
                t.check(brute == Ok(poly), || {
                    format!("automorphism count: mu={mu} q={q} poly={poly} brute={brute:?}")
                });
            }
        }
    })
}

pub fn criterion_4(b: &Bounds) -> CriterionResult {
    timed(4, NAMES[3], |t| {
        for dp in 0..=b.collided_dp {
            for d in 0..=dp {
                match collided_fiber_mass(d, dp) {
                    Ok(c) => t.check(c.matches(), || {
                        format!(
                            "{}: d={d} d'={dp} degree={} leading={} |E|={}",
                            NAMES[3], c.degree, c.leading, c.e_count
                        )
                    }),
                    Err(e) => t.check(false, || format!("{}: d={d} d'={dp}: {e}", NAMES[3])),
                }
            }
        }
    })
}

fn set(v: &[usize]) -> Subset {
    v.iter().copied().collect()
}

fn involutions(text: &[&str]) -> Vec<Involution> {
    let mut out: Vec<Involution> = text
        .iter()
        .map(|s| {
            Involution::new(crate::perm::parse_cycles(s, Some(4)).expect("literal"))
                .expect("literal involution")
        })
        .collect();
    out.sort();
    out
}

pub fn criterion_5(_b: &Bounds) -> CriterionResult {
    timed(5, NAMES[4], |t| {
        let disjoint: Vec<(Subset, Subset)> = enumerate_c_pairs(2, 2)
            .unwrap_or_default()
            .into_iter()
            .filter(|p| p.disjoint)
            .map(|p| (p.j, p.jp))
            .collect();
        t.check(
            disjoint == vec![(set(&[1, 2]), set(&[3, 4])), (set(&[1, 3]), set(&[2, 4]))],
            || format!("disjoint condition-(C) pairs for (2,2): got {disjoint:?}"),
        );
        let s = strata_for(&set(&[1, 3]), &set(&[2, 4]), Some(4));
        t.check(s.as_ref().ok() == Some(&involutions(&["(1 2)(3 4)"])), || {
            format!("strata for J={{1,3}} J'={{2,4}}: got {s:?}")
        });
        let s = strata_for(&set(&[1, 2]), &set(&[3, 4]), Some(4));
        t.check(
            s.as_ref().ok() == Some(&involutions(&["(1 3)(2 4)", "(1 4)(2 3)"])),
            || format!("strata for J={{1,2}} J'={{3,4}}: got {s:?}"),
        );
    })
}

pub fn criterion_6(b: &Bounds) -> CriterionResult {
    timed(6, NAMES[5], |t| {
        let cells: Vec<(usize, usize)> = (0..=b.ind_total)
            .flat_map(|total| (0..=total / 2).map(move |d| (d, total - d)))
            .collect();
        let iso: Vec<_> = cells
            .par_iter()
            .map(|&(d, dp)| (d, dp, verify_induced_iso(d, dp)))
            .collect();
        for (d, dp, r) in iso {
            t.check_result(r, || format!("Ind_E character equals induced character: d={d} d'={dp}"));
        }
        for &(d, dp) in &cells {
            for r in 1..=b.ind_r {
                let got = invariants_dim(d, dp, r);
                let want = invariants_dim_closed(d, dp, r) as i128;
                t.check(got == Ok(want), || {
                    format!("invariant dimension: d={d} d'={dp} r={r} got={got:?} want={want}")
                });
            }
        }
    })
}

pub fn criterion_7(b: &Bounds) -> CriterionResult {
    timed(7, NAMES[6], |t| {
        let mut cells = Vec::new();
        for (q, bound) in [(2u32, b.orbit_q2), (3, b.orbit_q3)] {
            for total in 0..=bound {
                for d in 0..=total {
                    cells.push((d, total - d, q));
                }
            }
        }
        let rows: Vec<_> = cells
            .par_iter()
            .map(|&(d, dp, q)| (d, dp, q, orbit_row(d, dp, q)))
            .collect();
        for (d, dp, q, row) in rows {
            match row {
                Ok(r) => t.check(r.matches(), || {
                    format!(
                        "{}: d={d} d'={dp} q={q} orbits={} bar_E={} dual={}",
                        NAMES[6], r.orbits, r.bar_e, r.dual_bar_e
                    )
                }),
                Err(e) => t.check(false, || format!("{}: d={d} d'={dp} q={q}: {e}", NAMES[6])),
            }
        }
        if b.orbit_q2 >= 3 {
            let small = [(1, 1, 3usize), (1, 2, 6)];
            for (d, dp, want) in small {
                let got = orbit_row(d, dp, 2).map(|r| r.orbits);
                t.check(got == Ok(want), || format!("orbit count for {d}+{dp} over F_2: {got:?}"));
            }
        }
    })
}

pub fn criterion_8(b: &Bounds) -> CriterionResult {
    timed(8, NAMES[7], |t| {
        let levis: Vec<BlockLevi> = (1..=b.levi_n)
            .flat_map(BlockLevi::all)
            .filter(is_antistandard)
            .collect();
        t.check(
            b.levi_n < 4 || levis.contains(&BlockLevi::interleaved(2)),
            || "interleaved GL2 x GL2 is antistandard".to_string(),
        );
        for levi in levis {
            match sweep_a12(&levi, b.levi_lambda, b.levi_nu) {
                Ok(s) => {
                    t.check(s.holds(), || {
                        format!(
                            "{}: M={levi} first failure {:?}",
                            NAMES[7],
                            s.failures.first()
                        )
                    });
                }
                Err(e) => t.check(false, || format!("{}: M={levi}: {e}", NAMES[7])),
            }
        }
    })
}

pub fn criterion_9(b: &Bounds) -> CriterionResult {
    timed(9, NAMES[8], |t| {
        for n in 1..=b.audit_n {
            for d in 0..=b.audit_d {
                for dp in 0..=b.audit_d {
                    for g in 0..=b.audit_g {
                        let c = verify_eq40(n, d, dp, g);
                        t.check(c.equal, || {
                            format!(
                                "relative dimension identity: n={n} d={d} d'={dp} g={g} lhs={} rhs={}",
                                c.lhs, c.rhs
                            )
                        });
                    }
                }
            }
            for r in 0..=b.audit_d {
                for g in 0..=b.audit_g {
                    t.check(b_doubled_closed(n, r, g) == self::b(2 * n, r, g), || {
                        format!("closed form of b(2n, r): n={n} r={r} g={g}")
                    });
                }
            }
        }
        for n in 1..=b.schur_n {
            for dp in 0..=b.schur_dp {
                for d in 0..=dp {
                    t.check_result(verify_index_reversal(n, d, dp), || {
                        format!("reversal of increasing index set: n={n} d={d} d'={dp}")
                    });
                }
            }
        }
    })
}

pub type Criterion = fn(&Bounds) -> CriterionResult;

pub const CRITERIA: [Criterion; 9] = [
    criterion_1,
    criterion_2,
    criterion_3,
    criterion_4,
    criterion_5,
    criterion_6,
    criterion_7,
    criterion_8,
    criterion_9,
];

/// Runs every criterion, in order of id.
pub fn run_all(b: &Bounds) -> Vec<CriterionResult> {
    CRITERIA.iter().map(|c| c(b)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_parse() {
        let mut b = Bounds::default();
        b.set("levi_n=3").unwrap();
        assert_eq!(b.levi_n, 3);
        b.set("schur_dp = 6").unwrap();
        assert_eq!(b.raised(), vec!["schur_dp"]);
        assert!(b.set("nope=1").is_err());
        assert!(b.set("levi_n").is_err());
        assert!(b.set("levi_n=x").is_err());
    }

    #[test]
    fn quick_criteria_pass() {
        let b = Bounds::default();
        assert!(criterion_5(&b).passed);
        assert!(criterion_9(&b).passed);
    }
}
