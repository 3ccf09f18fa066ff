use orbitkit::algebra::{build_algebra, AlgebraParams};
use orbitkit::coadjoint::{casimirs, coadjoint_action, FieldParams};
use orbitkit::dynamics::{closed_form_flow, hamiltonian, integrate};
use orbitkit::groups::{multiply, ExtendedGroupElement};
use orbitkit::orbit::{bracket_table, from_coadjoint};
use orbitkit::{CoadjointVector, Family, Vec2};

#[test]
fn f32_smoke() {
    for fam in Family::ALL {
        let p = AlgebraParams::<f32>::unit(fam);
        assert!(build_algebra(&p).jacobi_residual() < 1e-6);
        let g = ExtendedGroupElement { theta: 0.3f32, v: Vec2(0.1, 0.2), x: Vec2(-0.4, 0.5), t: 0.7, ..ExtendedGroupElement::identity(fam) };
        let gg = multiply(&p, &g, &g).unwrap();
        assert!((gg.theta - 0.6).abs() < 1e-6);

        let xi = CoadjointVector::with_policy(&p, 1.0f32, 0.2, 0.5, Vec2(0.3, -0.1), Vec2(0.4, 0.9), Vec2(0.8, 0.6));
        let fp = FieldParams::for_mass(1.0f32, 1.0);
        let c0 = casimirs(&xi, &fp).unwrap();
        let c1 = casimirs(&coadjoint_action(&p, &g, &xi).unwrap(), &fp).unwrap();
        assert!((c0.u - c1.u).abs() < 1e-4);

        let pt = from_coadjoint(&xi, &fp).unwrap();
        for e in bracket_table(&pt).coordinates {
            assert!((e.finite_difference(&pt) - e.value).abs() < 2e-2, "{fam} {}", e.key(fam));
        }
        let traj = integrate(&pt, 1.0f32, 0.01).unwrap();
        let cf = closed_form_flow(&pt, 1.0f32);
        assert!(traj.last().point.max_abs_diff(&cf) < 1e-4);
        assert!((hamiltonian(&cf).total - hamiltonian(&pt).total).abs() < 1e-4);
    }
}
