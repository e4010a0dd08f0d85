use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcong::congruence::congruent;
use qcong::cyclotomic::cyclotomic;
use qcong::family::{generate, FamilySpec, Sequence};
use qcong::poly::{LaurentPoly, RatExpr};
use qcong::theorems::*;
use qcong::transforms::PolySeq;

fn uni(fam: &FamilySpec, n: u64) -> PolySeq<LaurentPoly> {
    match generate(fam, n as usize).unwrap() {
        Sequence::Uni(f) => f,
        Sequence::Bi(_) => panic!("expected a univariate family"),
    }
}

fn random_sym(rng: &mut ChaCha8Rng) -> SymParams {
    loop {
        let (n, d, r) = (rng.gen_range(3..=9u64), rng.gen_range(1..=5u64), rng.gen_range(-5..=5i64));
        if let Ok(p) = SymParams::new(n, d, r) {
            return p;
        }
    }
}

#[test]
fn small_grid_holds() {
    for n in 2..=7u64 {
        for d in 1..=3u64 {
            for r in -3..=3 {
                let Ok(p) = SymParams::new(n, d, r) else { continue };
                for fam in [FamilySpec::Ones, FamilySpec::Delta(1), FamilySpec::random(11, 2)] {
                    let rep = check_thm_1_1(&p, &fam).unwrap();
                    assert!(rep.holds, "{rep}");
                    assert!(check_thm_1_2(&p, &fam).unwrap().holds);
                }
                assert!(check_guo_zeng(&p).unwrap().holds);
                if n % 2 == 1 && n >= 3 {
                    assert!(check_sun_p_analogue(&p).unwrap().holds);
                }
            }
        }
    }
}

#[test]
fn reported_fields_follow_the_parameters() {
    let rep = check_thm_1_1(&SymParams::new(6, 5, 2).unwrap(), &FamilySpec::Delta(1)).unwrap();
    assert!(rep.holds);
    assert_eq!(rep.branch, Some(Parity::Even));
    assert_eq!(rep.a, Some(2));
    let line = rep.to_string();
    assert!(line.starts_with("PASS thm1.1 n=6 d=5 r=2 family=delta:1 a=2"), "{line}");

    let rep = check_thm_2_1(&AlphaParams::new(5, 2, 1).unwrap(), &FamilySpec::Ones).unwrap();
    assert!(rep.holds);
    assert_eq!((rep.a, rep.exponent, rep.sign), (Some(2), Some(3 + 10 - 10), Some(1)));
}

#[test]
fn guards() {
    assert!(SymParams::new(4, 2, 1).is_err());
    let even = SymParams::new(4, 1, 1).unwrap();
    assert!(check_sun_p_analogue(&even).is_err());
    assert!(check_thm_1_1(&even, &FamilySpec::SunPX).is_err());
    assert!(check_thm_1_2(&SymParams::new(5, 2, 1).unwrap(), &FamilySpec::SunPX).unwrap().holds);
}

#[test]
fn identity_implies_congruence_at_s0() {
    for n in 2..=8u64 {
        for a in 0..n as i64 {
            for fam in [FamilySpec::Ones, FamilySpec::random(5, 3), FamilySpec::MonomialX] {
                let ident = check_s0_identity(n, a, &fam).unwrap();
                let cong = check_thm_2_1(&AlphaParams::new(n, a, 0).unwrap(), &fam).unwrap().holds;
                assert!(ident && cong, "n={n} a={a} fam={fam}");
            }
            // d = 1, r = -a gives <-r/d>_n = a
            assert_eq!(SymParams::new(n, 1, -a).unwrap().a, a);
        }
    }
}

fn add_phi_to_lhs<N: qcong::QPoly>(s: &Sides<N>, n: u64, c: i64) -> Sides<N> {
    let bump = (&cyclotomic(n).unwrap() * &s.lhs.den).scale(&c.into());
    let mut num = s.lhs.num.clone();
    num += &N::from(bump);
    Sides { lhs: RatExpr { num, den: s.lhs.den.clone() }, rhs: s.rhs.clone() }
}

#[test]
fn adding_phi_to_lhs_always_breaks() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for trial in 0..50 {
        let p = random_sym(&mut rng);
        let c = loop {
            let c = rng.gen_range(-9..=9i64);
            if c != 0 {
                break c;
            }
        };
        let f = uni(&FamilySpec::random(trial, 3), p.n);
        let s = if trial % 2 == 0 { thm_1_1_sides(&p, &f).unwrap() } else { thm_1_2_sides(&p, &f).unwrap() };
        assert!(s.decide(p.n, 2).unwrap().0);
        let (holds, residual) = add_phi_to_lhs(&s, p.n, c).decide(p.n, 2).unwrap();
        assert!(!holds && residual.is_some(), "trial {trial}: {p:?} c={c}");
    }
}

#[test]
fn wrong_sign_branch_fails_generically() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut tried, mut failed) = (0, 0);
    while tried < 40 {
        let p = random_sym(&mut rng);
        let f = uni(&FamilySpec::random(rng.gen(), 3), p.n);
        let s = thm_1_1_sides(&p, &f).unwrap();
        let zero = RatExpr::from_poly(LaurentPoly::zero());
        if congruent(&s.lhs, &zero, p.n, 2).unwrap() && congruent(&s.rhs, &zero, p.n, 2).unwrap() {
            continue;
        }
        tried += 1;
        let flipped = Sides { lhs: s.lhs.neg(), rhs: s.rhs.clone() };
        if !flipped.decide(p.n, 2).unwrap().0 {
            failed += 1;
        }
    }
    assert!(failed * 10 >= tried * 9, "{failed}/{tried}");
}

/// Both sides are linear in `f` and the congruence holds for every sequence,
/// so the mutation is applied to the plain side only. Parameters with
/// `r = 0` or `r = d` are redrawn: there `T_1 = 0` and `f_1` carries no weight.
#[test]
fn perturbing_f1_on_one_side_breaks_thm_1_1() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut broken = 0;
    for trial in 0..50u64 {
        let p = loop {
            let p = random_sym(&mut rng);
            if p.r != 0 && p.r != p.d as i64 {
                break p;
            }
        };
        let f = uni(&FamilySpec::random(1000 + trial, 3), p.n);
        let honest = thm_1_1_sides(&p, &f).unwrap();
        assert!(honest.decide(p.n, 2).unwrap().0);
        let mut g = f.clone();
        g.entries[1] += &LaurentPoly::one();
        let mutated = Sides { lhs: thm_1_1_sides(&p, &g).unwrap().lhs, rhs: honest.rhs };
        if !mutated.decide(p.n, 2).unwrap().0 {
            broken += 1;
        }
    }
    assert!(broken >= 45, "{broken}/50");
}

#[test]
fn alpha_grid_and_controls() {
    for n in 2..=6u64 {
        for a in 0..n as i64 {
            for s in -2..=2 {
                let p = AlphaParams::new(n, a, s).unwrap();
                let rep = check_thm_2_1(&p, &FamilySpec::random(3, 2)).unwrap();
                assert!(rep.holds, "{rep}");
                // negating the prefactor breaks every case whose right side is nonzero
                let f = uni(&FamilySpec::random(3, 2), n);
                let sides = thm_2_1_sides(&p, &f).unwrap();
                let flipped = Sides { lhs: sides.lhs.neg(), rhs: sides.rhs.clone() };
                let zero = RatExpr::from_poly(LaurentPoly::zero());
                if !congruent(&sides.rhs, &zero, n, 2).unwrap() {
                    assert!(!flipped.decide(n, 2).unwrap().0, "n={n} a={a} s={s}");
                }
            }
        }
    }
}

#[test]
fn lemma_grid() {
    for n in 2..=12u64 {
        for s in (-3..=3).filter(|&s| s != 0) {
            for j in 1..n as i64 {
                assert!(check_lemma_sn_binom(n, s, j).unwrap());
                assert!(check_lemma_sn_minus1(n, s, j).unwrap());
            }
        }
    }
    for n in (2..=30).step_by(2) {
        assert!(check_even_sign_fact(n).unwrap());
    }
}

#[test]
fn classical_specialisation() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for p in [3u64, 5, 7, 11, 13] {
        for (num, den) in [(2, 1), (1, 2), (-1, 3), (5, 2), (-7, 4)] {
            if den % p as i64 == 0 {
                continue;
            }
            for _ in 0..5 {
                let f: Vec<i64> = (0..p).map(|_| rng.gen_range(-20..=20)).collect();
                assert!(check_classical_sun(p, num, den, &f).unwrap(), "p={p} alpha={num}/{den} f={f:?}");
            }
        }
    }
    assert!(check_classical_sun(3, 1, 3, &[1, 1, 1]).is_err());
}
