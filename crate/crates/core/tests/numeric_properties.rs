use crmostow::catalog::load_label;
use crmostow::numerics::exhaustion::{exhaustion_phi, PhiOptions};
use crmostow::numerics::jacobi::{exp_differential, JacobiField};
use crmostow::numerics::linalg::{c, expm_hermitian, frob_norm, herm_part, identity, real, CMat};
use crmostow::numerics::minor::minor_log_inequality;
use crmostow::numerics::mostow::MostowStructure;
use crmostow::numerics::spd::dist;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

fn complex(n: usize) -> impl Strategy<Value = CMat> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n * n)
        .prop_map(move |e| CMat::from_fn(n, n, |i, j| c(e[i * n + j].0, e[i * n + j].1)))
}

fn traceless_hermitian(n: usize) -> impl Strategy<Value = CMat> {
    complex(n).prop_map(move |a| {
        let h = herm_part(&a);
        let tr = h.trace() / real(n as f64);
        h - identity(n) * tr
    })
}

fn spd(n: usize) -> impl Strategy<Value = CMat> {
    complex(n).prop_map(move |a| &a * a.adjoint() + identity(n) * real(0.5))
}

fn det_one(p: CMat) -> CMat {
    let n = p.nrows();
    let d = p.determinant().re;
    p * real(d.powf(-1.0 / n as f64))
}

fn grassmann() -> &'static MostowStructure {
    static S: OnceLock<MostowStructure> = OnceLock::new();
    S.get_or_init(|| {
        let v = load_label("grassmann_pair(1,2,3,1)").unwrap().subalgebra().unwrap();
        MostowStructure::from_subalgebra(&v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn dist_is_congruence_invariant(p in spd(3), q in spd(3), g in complex(3)) {
        let g = g + identity(3) * real(2.0);
        prop_assume!(g.determinant().norm() > 0.1);
        let a = dist(&p, &q).unwrap();
        let b = dist(&(&g * &p * g.adjoint()), &(&g * &q * g.adjoint())).unwrap();
        prop_assert!((a - b).abs() <= 1e-8 * a.max(1.0), "{a} vs {b}");
        let back = dist(&q, &p).unwrap();
        prop_assert!((a - back).abs() <= 1e-9 * a.max(1.0));
    }

    #[test]
    fn jacobi_taylor_identity((h, z) in (2usize..=4).prop_flat_map(|n| (traceless_hermitian(n), complex(n)))) {
        let t = herm_part(&(&h * &h)) * real(0.3);
        let field = JacobiField::new(h, z, t).unwrap();
        let scale = field.norm_sq_direct(1.0).max(1.0);
        prop_assert!(field.taylor_residual().unwrap().abs() <= 1e-7 * scale);
        for s in [0.0, 0.5, 1.0] {
            let (d, cl) = (field.norm_sq_direct(s), field.norm_sq_closed(s));
            prop_assert!((d - cl).abs() <= 1e-9 * d.max(1.0), "t = {s}: {d} vs {cl}");
        }
    }

    #[test]
    fn exp_differential_matches_differences(h in traceless_hermitian(3), x in traceless_hermitian(3)) {
        let eps = 1e-5;
        let fd = (expm_hermitian(&(&h + &x * real(eps))) - expm_hermitian(&(&h - &x * real(eps)))) / real(2.0 * eps);
        let d = exp_differential(&h, &x);
        prop_assert!(frob_norm(&(fd - &d)) <= 1e-5 * frob_norm(&d).max(1.0));
    }

    #[test]
    fn minor_inequality_holds(p in spd(4)) {
        let r = minor_log_inequality(&det_one(p)).unwrap();
        prop_assert!(r.lhs >= r.rhs - 1e-10 * r.lhs.max(1.0), "{} < {}", r.lhs, r.rhs);
    }

    #[test]
    fn minor_equality_on_diagonals(d in prop::collection::vec(0.2f64..5.0, 1..=5)) {
        let n = d.len();
        let p = det_one(CMat::from_fn(n, n, |i, j| if i == j { real(d[i]) } else { real(0.0) }));
        let r = minor_log_inequality(&p).unwrap();
        prop_assert!((r.lhs - r.rhs).abs() <= 1e-10 * r.lhs.max(1.0));
        prop_assert!(!r.strict);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn phi_is_bounded_below_and_by_the_identity(seed in any::<u64>(), scale in 0.1f64..1.0) {
        let s = grassmann();
        let zeta = s.random_k(&mut ChaCha8Rng::seed_from_u64(seed), scale);
        let r = exhaustion_phi(s, &zeta, &PhiOptions { restarts: 2, seed, ..Default::default() }).unwrap();
        prop_assert!(r.phi >= -1e-10);
        prop_assert!(r.phi <= r.at_identity + 1e-10);
    }
}
