//! Property tests over generated group elements, algebra elements and orbit
//! points.

use orbitkit::algebra::{build_algebra, pairing, AlgebraElement, AlgebraParams};
use orbitkit::coadjoint::{casimirs, coadjoint_action, CoadjointVector, FieldParams};
use orbitkit::dynamics::{closed_form_flow, hamiltonian, symplectic_realization};
use orbitkit::groups::{adjoint_action, inverse, multiply, ExtendedGroupElement};
use orbitkit::orbit::{from_coadjoint, poisson_bracket, to_coadjoint, Coords};
use orbitkit::{Family, Vec2};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::Galilei),
        Just(Family::ParaGalileiPlus),
        Just(Family::ParaGalileiMinus)
    ]
}

fn vec2(a: f64) -> impl Strategy<Value = Vec2<f64>> {
    (-a..a, -a..a).prop_map(|(x, y)| Vec2(x, y))
}

fn params(fam: Family) -> impl Strategy<Value = AlgebraParams<f64>> {
    (0.1..10.0f64, 0.1..10.0f64, 0.1..10.0f64).prop_map(move |(c, r, w)| {
        if fam.is_para() {
            AlgebraParams::with_linked_c(fam, r, w).unwrap()
        } else {
            AlgebraParams::new(fam, c, r, w).unwrap()
        }
    })
}

fn group(fam: Family) -> impl Strategy<Value = ExtendedGroupElement<f64>> {
    (-3.0..3.0f64, vec2(2.0), vec2(2.0), -2.0..2.0f64, vec2(2.0), -2.0..2.0f64, -2.0..2.0f64).prop_map(
        move |(theta, v, x, t, aux, xi, phi)| ExtendedGroupElement { family: fam, theta, v, x, t, aux, xi, phi },
    )
}

fn element() -> impl Strategy<Value = AlgebraElement<f64>> {
    proptest::array::uniform10(-1.0..1.0f64).prop_map(|coeffs| AlgebraElement { coeffs })
}

fn covector(p: AlgebraParams<f64>) -> impl Strategy<Value = CoadjointVector<f64>> {
    (0.5..3.0f64, -2.0..2.0f64, -2.0..2.0f64, vec2(2.0), vec2(2.0), vec2(2.0))
        .prop_map(move |(m, j, e, k, pp, w)| CoadjointVector::with_policy(&p, m, j, e, k, pp, w))
}

/// (params, three group elements, algebra element, covector) for one family.
fn setup() -> impl Strategy<
    Value = (
        AlgebraParams<f64>,
        [ExtendedGroupElement<f64>; 3],
        AlgebraElement<f64>,
        CoadjointVector<f64>,
    ),
> {
    family().prop_flat_map(|fam| {
        params(fam).prop_flat_map(move |p| {
            (Just(p), [group(fam), group(fam), group(fam)], element(), covector(p))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn multiplication_is_associative((p, [a, b, c], _, _) in setup()) {
        let lhs = multiply(&p, &multiply(&p, &a, &b).unwrap(), &c).unwrap();
        let rhs = multiply(&p, &a, &multiply(&p, &b, &c).unwrap()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-10);
    }

    #[test]
    fn inverse_is_two_sided((p, [a, _, _], _, _) in setup()) {
        let e = ExtendedGroupElement::identity(a.family);
        let ai = inverse(&p, &a).unwrap();
        prop_assert!(multiply(&p, &a, &ai).unwrap().max_abs_diff(&e) < 1e-10);
        prop_assert!(multiply(&p, &ai, &a).unwrap().max_abs_diff(&e) < 1e-10);
    }

    #[test]
    fn adjoint_is_linear((p, [a, _, _], x, _) in setup(), y in element(), k in -2.0..2.0f64) {
        let lhs = adjoint_action(&p, &a, &(x + y * k)).unwrap();
        let rhs = adjoint_action(&p, &a, &x).unwrap() + adjoint_action(&p, &a, &y).unwrap() * k;
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-12);
    }

    #[test]
    fn adjoint_preserves_brackets((p, [a, _, _], x, _) in setup(), y in element()) {
        let cs = build_algebra(&p);
        let ad = |z: &AlgebraElement<f64>| adjoint_action(&p, &a, z).unwrap();
        let lhs = ad(&cs.bracket(&x, &y));
        let rhs = cs.bracket(&ad(&x), &ad(&y));
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-9, "{}", lhs.max_abs_diff(&rhs));
    }

    #[test]
    fn pairing_is_invariant((p, [a, _, _], x, xi) in setup()) {
        let lhs = pairing(&coadjoint_action(&p, &a, &xi).unwrap(), &adjoint_action(&p, &a, &x).unwrap());
        prop_assert!((lhs - pairing(&xi, &x)).abs() < 1e-9);
    }

    #[test]
    fn casimirs_are_invariant((p, [a, _, _], _, xi) in setup()) {
        let fp = FieldParams::for_mass(xi.m, p.omega());
        let before = casimirs(&xi, &fp).unwrap();
        let after = casimirs(&coadjoint_action(&p, &a, &xi).unwrap(), &fp).unwrap();
        prop_assert!((before.u - after.u).abs() <= 1e-9 * before.u.abs().max(1.0));
        prop_assert!((before.intensity - after.intensity).abs() <= 1e-9 * before.intensity.max(1.0));
    }

    #[test]
    fn chart_round_trip((p, _, _, xi) in setup()) {
        let fp = FieldParams::for_mass(xi.m, p.omega());
        let pt = from_coadjoint(&xi, &fp).unwrap();
        let back = to_coadjoint(&pt).unwrap();
        prop_assert!(back.max_abs_diff(&xi) < 1e-12);
    }

    #[test]
    fn realization_composes((p, [a, b, _], _, xi) in setup()) {
        let fp = FieldParams::for_mass(xi.m, p.omega());
        let pt = from_coadjoint(&xi, &fp).unwrap();
        let ab = multiply(&p, &a, &b).unwrap();
        let lhs = symplectic_realization(&ab, &pt).unwrap();
        let rhs = symplectic_realization(&a, &symplectic_realization(&b, &pt).unwrap()).unwrap();
        prop_assert!(lhs.max_abs_diff(&rhs) < 1e-8);
    }

    #[test]
    fn flow_conserves_energy((p, _, _, xi) in setup(), t in 0.0..10.0f64) {
        let fp = FieldParams::for_mass(xi.m, p.omega());
        let pt = from_coadjoint(&xi, &fp).unwrap();
        let h0 = hamiltonian(&pt).total;
        let h1 = hamiltonian(&closed_form_flow(&pt, t)).total;
        let moved = closed_form_flow(&pt, t);
        let scale = hamiltonian(&moved);
        let size = 1f64.max(scale.kinetic.abs() + scale.potential.abs() + scale.exotic.abs());
        prop_assert!((h1 - h0).abs() <= 1e-12 * size, "{} vs {}", h1, h0);
    }

    #[test]
    fn bracket_is_antisymmetric((p, _, _, xi) in setup(), i in 0usize..6, j in 0usize..6) {
        let fp = FieldParams::for_mass(xi.m, p.omega());
        let pt = from_coadjoint(&xi, &fp).unwrap();
        let f = move |z: &Coords<f64>| z[i] * z[j] + z[i];
        let g = move |z: &Coords<f64>| z[j].sin() + z[i] * z[i];
        let ab = poisson_bracket(f, g, &pt);
        let ba = poisson_bracket(g, f, &pt);
        prop_assert!((ab + ba).abs() < 1e-12 * ab.abs().max(1.0));
    }
}
