//! Shared fixtures for the criterion benchmarks.

use reflgroup::{CoxeterSystem, FiniteGroup, FiniteType, ImprimGroup, ImprimParams};

pub const BUDGET: usize = 1_000_000;

pub fn coxeter(name: &str) -> CoxeterSystem {
    let t: FiniteType = name.parse().expect("known type");
    CoxeterSystem::new(t.coxeter_matrix()).expect("finite type")
}

pub fn coxeter_group(name: &str) -> FiniteGroup {
    coxeter(name).enumerate(BUDGET).expect("within budget")
}

pub fn imprim(m: u32, p: u32, n: usize) -> ImprimGroup {
    let params = ImprimParams::from_mpn(m, p, n).expect("valid parameters");
    ImprimGroup::new(params, BUDGET).expect("within budget")
}
