use crmostow::cr::exact_signature;
use crmostow::exact::{Echelon, ExactMatrix, Qi, Rat};
use crmostow::lie::{make_subalgebra, normalizer, AmbientAlgebra, Closure, Subalgebra};
use crmostow::parabolic::{is_horocyclic, is_parabolic, parabolic_regularization, q_max, q_min, strengthen};
use proptest::prelude::*;
use std::sync::Arc;

fn gauss_vec(len: usize) -> impl Strategy<Value = Vec<Qi>> {
    prop::collection::vec((-3i64..=3, -3i64..=3).prop_map(|(a, b)| Qi::gauss(a, b)), len)
}

fn cartan(n: usize) -> Vec<ExactMatrix> {
    (0..n - 1)
        .map(|i| ExactMatrix::unit(n, i, i).sub(&ExactMatrix::unit(n, i + 1, i + 1)))
        .collect()
}

fn positive_roots(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect()
}

/// `h + <E_ij : (i,j) in mask>` closed up, or its nilpotent part alone.
fn triangular(n: usize, mask: &[bool], with_cartan: bool) -> Subalgebra {
    let k = Arc::new(AmbientAlgebra::sl(n));
    let mut gens: Vec<ExactMatrix> = positive_roots(n)
        .into_iter()
        .zip(mask)
        .filter(|(_, &m)| m)
        .map(|((i, j), _)| ExactMatrix::unit(n, i, j))
        .collect();
    if with_cartan {
        gens.extend(cartan(n));
    }
    make_subalgebra(&k, &gens, Closure::CloseUp).unwrap()
}

fn block_parabolic(sizes: &[usize]) -> Subalgebra {
    let n: usize = sizes.iter().sum();
    let block: Vec<usize> = sizes.iter().enumerate().flat_map(|(b, &s)| std::iter::repeat_n(b, s)).collect();
    let k = Arc::new(AmbientAlgebra::sl(n));
    let mut gens = cartan(n);
    for i in 0..n {
        for j in 0..n {
            if i != j && block[i] <= block[j] {
                gens.push(ExactMatrix::unit(n, i, j));
            }
        }
    }
    make_subalgebra(&k, &gens, Closure::CloseUp).unwrap()
}

fn hermitian(n: usize) -> impl Strategy<Value = ExactMatrix> {
    prop::collection::vec((-4i64..=4, -4i64..=4), n * n).prop_map(move |e| {
        ExactMatrix::from_fn(n, |i, j| {
            let (a, b) = e[i.min(j) * n + i.max(j)];
            match i.cmp(&j) {
                std::cmp::Ordering::Equal => Qi::from_int(a),
                std::cmp::Ordering::Less => Qi::gauss(a, b),
                std::cmp::Ordering::Greater => Qi::gauss(a, -b),
            }
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn echelon_depends_only_on_the_span(
        vs in prop::collection::vec(gauss_vec(5), 1..5),
        mix in prop::collection::vec((0usize..8, 0usize..8, -2i64..=2, -2i64..=2), 0..6),
        unit in prop::sample::select(vec![Qi::gauss(1, 0), Qi::gauss(0, 1), Qi::gauss(-2, 1)]),
    ) {
        let a = Echelon::from_vectors(5, vs.clone());
        let mut ws = vs.clone();
        let k = ws.len();
        for (i, j, re, im) in mix {
            let (i, j) = (i % k, j % k);
            if i != j {
                let c = Qi::gauss(re, im);
                let add: Vec<Qi> = ws[j].iter().map(|x| x.mul(&c)).collect();
                ws[i] = ws[i].iter().zip(&add).map(|(x, y)| x.add(y)).collect();
            }
        }
        ws[0] = ws[0].iter().map(|x| x.mul(&unit)).collect();
        ws.reverse();
        let b = Echelon::from_vectors(5, ws);
        prop_assert_eq!(a, b);
    }

    #[test]
    fn signature_scales_and_flips(h in hermitian(4), p in 1i64..5, q in 1i64..5) {
        let s = exact_signature(&h);
        prop_assert_eq!(s.pos + s.neg + s.zero, 4);
        let c = Qi::from_rat(Rat::new(p, q));
        prop_assert_eq!(exact_signature(&h.scale(&c)), s);
        let f = exact_signature(&h.scale(&c.neg()));
        prop_assert_eq!((f.pos, f.neg, f.zero), (s.neg, s.pos, s.zero));
    }

    #[test]
    fn signature_is_a_congruence_invariant(h in hermitian(4), upper in prop::collection::vec((-2i64..=2, -2i64..=2), 6)) {
        let mut s = ExactMatrix::identity(4);
        let mut it = upper.into_iter();
        for i in 0..4 {
            for j in i + 1..4 {
                let (a, b) = it.next().unwrap();
                s.set(i, j, Qi::gauss(a, b));
            }
        }
        let congruent = s.mul(&h).mul(&s.adjoint());
        prop_assert_eq!(exact_signature(&congruent), exact_signature(&h));
    }

    #[test]
    fn signature_agrees_with_eigenvalues(h in hermitian(3)) {
        let s = exact_signature(&h);
        let eig = h.to_c64().symmetric_eigenvalues();
        let pos = eig.iter().filter(|&&e| e > 1e-9).count();
        let neg = eig.iter().filter(|&&e| e < -1e-9).count();
        prop_assert_eq!((s.pos, s.neg), (pos, neg));
    }

    #[test]
    fn parabolic_chain(mask in prop::collection::vec(any::<bool>(), 6), with_cartan in any::<bool>()) {
        let v = triangular(4, &mask, with_cartan);
        prop_assert!(v.is_n_reductive());
        let reg = parabolic_regularization(&v).unwrap();
        prop_assert!(reg.steps() <= v.ambient().dim());
        prop_assert!(is_parabolic(&reg.e));
        let lo = q_min(&v).unwrap();
        prop_assert!(is_parabolic(&lo));
        prop_assert!(v.space().is_subspace_of(lo.space()));
        prop_assert!(v.nr().is_subspace_of(lo.nr()));
        let hi = q_max(&v, &lo).unwrap();
        prop_assert!(is_parabolic(&hi));
        prop_assert!(lo.space().is_subspace_of(hi.space()));
        prop_assert!(hi.nr().is_subspace_of(lo.nr()));
    }

    #[test]
    fn strengthening_keeps_the_levi_part(mask in prop::collection::vec(any::<bool>(), 6), with_cartan in any::<bool>()) {
        let v = triangular(4, &mask, with_cartan);
        let q = q_min(&v).unwrap();
        let t = strengthen(&v, &q).unwrap();
        prop_assert!(v.space().is_subspace_of(t.space()));
        prop_assert_eq!(t.levi(), v.levi());
        prop_assert!(t.nr().dim() >= v.nr().dim());
        prop_assert!(q.nr().is_subspace_of(t.nr()));
    }

    #[test]
    fn horocyclic_spaces_are_their_normalizers_nilradical(sizes in prop::collection::vec(1usize..3, 2..4)) {
        let q = block_parabolic(&sizes);
        prop_assert!(is_parabolic(&q));
        let s = q.nr().clone();
        prop_assert!(is_horocyclic(q.ambient(), &s).unwrap());
        let nq = normalizer(q.ambient(), &s);
        prop_assert_eq!(nq.space(), q.space());
        prop_assert_eq!(nq.nr(), &s);
    }
}
