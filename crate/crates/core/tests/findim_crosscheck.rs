use lienil::coeff::RingSpec;
use lienil::findim::{
    commutative_series, grassmann, heisenberg_truncated, ideal_from_gens_findim, sn_values, tideal_findim,
    unitriangular_plus_unit, Element, StructureAlgebra,
};
use lienil::gensets::sn_generators;

const Q: RingSpec = RingSpec::Rationals;

fn evaluated_sn(a: &StructureAlgebra, n: usize) -> Vec<Element> {
    let values: Vec<Element> = a.generators().iter().map(|(_, e)| e.clone()).collect();
    sn_generators(Q, n, values.len())
        .unwrap()
        .iter()
        .map(|p| a.evaluate(p, &values).unwrap())
        .filter(|e| !e.is_zero())
        .collect()
}

#[test]
fn free_generators_evaluate_to_the_criterion_values() {
    let algebras = [
        grassmann(3, Q).unwrap(),
        unitriangular_plus_unit(3, Q).unwrap(),
        commutative_series(3, Q).unwrap(),
        heisenberg_truncated(4, Q).unwrap(),
    ];
    for a in &algebras {
        for n in 3..=4 {
            let from_free = ideal_from_gens_findim(a, &evaluated_sn(a, n)).unwrap();
            let from_search = ideal_from_gens_findim(a, &sn_values(a, n).unwrap()).unwrap();
            assert!(from_free.same_as(&from_search), "n = {n}, dim {}", a.dim());
            assert!(from_free.same_as(&tideal_findim(a, n).unwrap()));
        }
    }
}
