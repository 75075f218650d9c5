//! Named invariant suites run by `ihs-hodge check`.

use std::fmt;

use crate::equivariant::EquivariantDiamond;
use crate::error::Result;
use crate::goettsche::{abelian_fourfold_diamond, hilbert_scheme_diamond, surface_diamond, GoettscheConfig, SurfaceKind};
use crate::hodge::{check_diamond, solve_betti_dim6, BettiVector, HodgeDiamond};
use crate::og6::{
    delta_bar_diamond, derive_invariant_h2, markman_assembly, markman_plain, quadric3_diamond, run_full_pipeline,
    NamedConstants, PipelineConfig, OG6_DIM,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Suite {
    All,
    Salamon,
    Duality,
    Goettsche,
    Equivariant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: String,
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for CheckOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(f, "PASS {}", self.name),
            Some(why) => write!(f, "FAIL {}: {why}", self.name),
        }
    }
}

struct Collector(Vec<CheckOutcome>);

impl Collector {
    fn check(&mut self, name: impl Into<String>, result: Result<Option<String>>) {
        let failure = match result {
            Ok(failure) => failure,
            Err(e) => Some(e.to_string()),
        };
        self.0.push(CheckOutcome { name: name.into(), failure });
    }

    fn expect_eq<T: PartialEq + fmt::Debug>(&mut self, name: impl Into<String>, result: Result<(T, T)>) {
        self.check(
            name,
            result.map(|(got, want)| (got != want).then(|| format!("got {got:?}, expected {want:?}"))),
        );
    }
}

fn k3_hilb(n: u32) -> Result<HodgeDiamond> {
    hilbert_scheme_diamond(&surface_diamond(SurfaceKind::K3), n, GoettscheConfig::default())
}

fn abelian_hilb(n: u32) -> Result<HodgeDiamond> {
    hilbert_scheme_diamond(&surface_diamond(SurfaceKind::Abelian), n, GoettscheConfig::default())
}

fn og6() -> Result<HodgeDiamond> {
    run_full_pipeline(PipelineConfig::default()).map(|out| out.diamond)
}

fn salamon(c: &mut Collector) {
    c.expect_eq("salamon residual of OG6", og6().and_then(|d| d.betti()?.salamon_residual()).map(|r| (r, 0)));
    for n in [2, 3] {
        c.expect_eq(
            format!("salamon residual of K3^[{n}]"),
            k3_hilb(n).and_then(|d| d.betti()?.salamon_residual()).map(|r| (r, 0)),
        );
    }
    c.check(
        "salamon residual detects single-entry perturbations of OG6",
        og6().and_then(|d| {
            let base = d.betti()?.as_slice().to_vec();
            for k in (0..base.len()).step_by(2) {
                for delta in [-1i64, 1] {
                    let mut b = base.clone();
                    b[k] = (b[k] as i64 + delta) as u64;
                    if BettiVector::new(OG6_DIM, b)?.salamon_residual()? == 0 {
                        return Ok(Some(format!("b_{k} {delta:+} leaves the residual at zero")));
                    }
                }
            }
            Ok(None)
        }),
    );
    c.expect_eq("Betti numbers solved from b2 = 8, chi = 1920", solve_betti_dim6(1, 8, 1920).map(|r| (r, (199, 1504))));
}

fn symmetric(c: &mut Collector, name: &str, d: Result<HodgeDiamond>) {
    c.check(
        format!("Hodge symmetry and duality of {name}"),
        d.and_then(|d| check_diamond(&d)).map(|r| r.violations.first().map(ToString::to_string)),
    );
}

fn duality(c: &mut Collector) {
    symmetric(c, "OG6", og6());
    for n in 0..=3 {
        symmetric(c, &format!("K3^[{n}]"), k3_hilb(n));
        symmetric(c, &format!("A^[{n}]"), abelian_hilb(n));
    }
    symmetric(c, "A x A^v", Ok(abelian_fourfold_diamond()));
    symmetric(c, "the fixed locus", Ok(delta_bar_diamond(NamedConstants::default())));
    symmetric(c, "the quadric threefold", Ok(quadric3_diamond()));
}

fn goettsche(c: &mut Collector) {
    for kind in [SurfaceKind::K3, SurfaceKind::Abelian] {
        let s = surface_diamond(kind);
        let cfg = GoettscheConfig::default();
        c.expect_eq(format!("{kind}^[0] is a point"), hilbert_scheme_diamond(&s, 0, cfg).map(|d| (d, HodgeDiamond::point())));
        c.expect_eq(format!("{kind}^[1] is the surface"), hilbert_scheme_diamond(&s, 1, cfg).map(|d| (d, s.clone())));
    }
    c.expect_eq(
        "K3^[3] agrees with the decomposition of its own H^2",
        k3_hilb(3).and_then(|d| {
            let assembled = markman_plain(&d.weight_part(2))?.complete_by_duality(6)?;
            Ok((assembled, d))
        }),
    );
    c.expect_eq(
        "K3^[3] Betti numbers from Salamon's relation",
        k3_hilb(3).and_then(|d| {
            let b = d.betti()?;
            let chi = d.euler_characteristic()?;
            Ok(((b.get(4), b.get(6)), solve_betti_dim6(1, b.get(2) as i64, chi)?))
        }),
    );
    for n in 1..=3 {
        c.expect_eq(format!("chi_top(A^[{n}]) = 0"), abelian_hilb(n).and_then(|d| d.euler_characteristic()).map(|x| (x, 0)));
    }
}

fn equivariant(c: &mut Collector) {
    let h2 = derive_invariant_h2(8);
    c.expect_eq(
        "monodromy-invariant Hodge numbers of Y",
        h2.clone().and_then(|h2| {
            let inv = markman_assembly(&h2)?.invariant_part();
            let rows: Vec<Vec<u64>> = (0..=3u32).map(|w| (0..=w).map(|q| inv.get(2 * w - q, q)).collect()).collect();
            Ok((rows, vec![vec![1], vec![1, 5], vec![1, 6, 157], vec![1, 5, 157, 852]]))
        }),
    );
    c.expect_eq(
        "monodromy-invariant Betti numbers of Y",
        h2.clone().and_then(|h2| {
            let totals = markman_assembly(&h2)?.invariant_part().weight_totals(6);
            Ok((totals.into_iter().step_by(2).collect::<Vec<_>>(), vec![1, 7, 171, 1178]))
        }),
    );
    c.expect_eq(
        "forgetting the involution commutes with the decomposition",
        h2.and_then(|h2| Ok((markman_assembly(&h2)?.forget(), markman_plain(&h2.forget())?))),
    );
    c.check("equivariant Sym^2 / Λ^2 dimension identities", {
        let mut failure = None;
        for a in 0..=8u64 {
            for b in 0..=(8 - a) {
                let d = EquivariantDiamond::new(None, [(1, 1, a as i64, b as i64)]);
                let check = d.and_then(|d| {
                    let s = d.eq_sym_power(2)?.get(2, 2).total();
                    let e = d.eq_ext_power(2)?.get(2, 2).total();
                    let m = a + b;
                    Ok(s == m * (m + 1) / 2 && e == m * m.saturating_sub(1) / 2)
                });
                if !matches!(check, Ok(true)) {
                    failure = Some(format!("fails for (plus, minus) = ({a}, {b})"));
                }
            }
        }
        Ok(failure)
    });
}

/// Runs a suite; every outcome is reported, failing or not.
pub fn run_suite(suite: Suite) -> Vec<CheckOutcome> {
    let mut c = Collector(Vec::new());
    match suite {
        Suite::Salamon => salamon(&mut c),
        Suite::Duality => duality(&mut c),
        Suite::Goettsche => goettsche(&mut c),
        Suite::Equivariant => equivariant(&mut c),
        Suite::All => {
            salamon(&mut c);
            duality(&mut c);
            goettsche(&mut c);
            equivariant(&mut c);
        }
    }
    c.0
}
