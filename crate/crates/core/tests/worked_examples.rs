use cartan_core::catalog::{g2_basis, sl_basis, so_basis, split_g2_basis};
use cartan_core::linalg::{int, unit_vector};
use cartan_core::solver::{
    check_maximal, constraint_space, extend_one, normality_on_space, rank_and_cartan, MaximalityCertificate,
    MaximalityVerdict, Normality, SearchBudget, SolverError,
};
use cartan_core::{bracket, LieAlgebra, RMatrix};
use num_traits::ToPrimitive;

/// Rank of an integer matrix by fraction-free elimination, sharing no code
/// with the rational linear algebra under test.
fn integer_rank(mut rows: Vec<Vec<i128>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(r, p);
        for i in r + 1..rows.len() {
            let (a, b) = (rows[r][c], rows[i][c]);
            if b == 0 {
                continue;
            }
            let pivot_row = rows[r].clone();
            for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                *x = *x * a - y * b;
            }
            let g = rows[i].iter().fold(0i128, |g, &x| num_integer::gcd(g, x));
            if g > 1 {
                rows[i].iter_mut().for_each(|x| *x /= g);
            }
        }
        r += 1;
    }
    r
}

/// Equations for `[m, sum a_i b_i] = 0`, one row per matrix entry.
fn ad_equations(alg: &LieAlgebra, m: &RMatrix) -> Vec<Vec<i128>> {
    let columns: Vec<RMatrix> = alg.basis().iter().map(|b| bracket(m, b).unwrap()).collect();
    let entries = alg.ambient() * alg.ambient();
    (0..entries)
        .map(|k| columns.iter().map(|c| c.entries()[k].to_integer().to_i128().unwrap()).collect())
        .collect()
}

fn satisfies(equations: &[Vec<i128>], index: usize) -> bool {
    equations.iter().all(|row| row[index] == 0)
}

fn verdict(alg: &LieAlgebra, indices: &[usize]) -> MaximalityVerdict {
    let current: Vec<_> = indices.iter().map(|&i| alg.basis_element(i - 1)).collect();
    check_maximal(alg, &current, &SearchBudget::default())
}

#[test]
fn so6_centralizer_of_b1() {
    let so6 = so_basis(6).unwrap();
    let b1 = &so6.basis()[0];
    let kernel = so6.ad_kernel(b1).unwrap();
    let equations = ad_equations(&so6, b1);
    assert_eq!(kernel.dim(), 7);
    assert_eq!(so6.dim() - integer_rank(equations.clone()), 7);
    for i in [1, 10, 15] {
        assert!(satisfies(&equations, i - 1), "b{i}");
        assert!(kernel.contains(&unit_vector(15, i - 1)), "b{i}");
    }
}

#[test]
fn g2_centralizer_matches_integer_oracle() {
    let g2 = g2_basis();
    let m = g2.expand(&[1, 0, 0, 0, 5, 0, 0, 0, 0, 0, 0, 0, 0, 0].map(int));
    let kernel = g2.ad_kernel(&m).unwrap();
    assert_eq!(kernel.dim(), g2.dim() - integer_rank(ad_equations(&g2, &m)));
    assert!(kernel.contains(g2.coords_of(&m).unwrap().coords()));
}

#[test]
fn constraint_space_along_the_so6_run() {
    let so6 = so_basis(6).unwrap();
    assert_eq!(constraint_space(&so6, &[]).dim(), 15);
    let two = constraint_space(&so6, &[so6.basis_element(0), so6.basis_element(9)]);
    assert_eq!(two.dim(), 1);
    assert!(two.basis().contains(&unit_vector(15, 14)));
    assert_eq!(normality_on_space(&two), Normality::IdenticallyNormal);
    let three = constraint_space(&so6, &[so6.basis_element(0), so6.basis_element(9), so6.basis_element(14)]);
    assert!(three.is_zero());
}

#[test]
fn maximality_verdicts() {
    let so6 = so_basis(6).unwrap();
    assert_eq!(
        verdict(&so6, &[1, 10, 15]),
        MaximalityVerdict::Maximal(MaximalityCertificate::TrivialConstraintSpace)
    );
    assert!(matches!(verdict(&so6, &[1]), MaximalityVerdict::NotMaximal(_)));
    let sl3 = sl_basis(3).unwrap();
    assert_eq!(
        verdict(&sl3, &[7, 8]),
        MaximalityVerdict::Maximal(MaximalityCertificate::TrivialConstraintSpace)
    );
}

#[test]
fn extension_step_in_so6() {
    let so6 = so_basis(6).unwrap();
    let next = extend_one(&so6, &[so6.basis_element(0), so6.basis_element(9)], &SearchBudget::default()).unwrap();
    assert_eq!(next.coords(), &unit_vector(15, 14)[..]);
}

#[test]
fn sl3_b1_is_rejected() {
    let sl3 = sl_basis(3).unwrap();
    let b1 = sl3.basis()[0].clone();
    assert_eq!(
        bracket(&b1, &b1.transpose()).unwrap(),
        RMatrix::from_i64_rows(&[[1, 0, 0], [0, -1, 0], [0, 0, 0]])
    );
    assert_eq!(
        rank_and_cartan(&sl3, &[b1], &SearchBudget::default()),
        Err(SolverError::SeedNotNormal { first: 0, second: 0 })
    );
}

#[test]
fn so6_rank_from_other_seeds() {
    let so6 = so_basis(6).unwrap();
    for seed in [vec![9], vec![0, 9]] {
        let ms: Vec<RMatrix> = seed.iter().map(|&i| so6.basis()[i].clone()).collect();
        assert_eq!(rank_and_cartan(&so6, &ms, &SearchBudget::default()).unwrap().rank(), 3);
    }
}

#[test]
fn split_g2_from_a_combined_seed() {
    let sg = split_g2_basis();
    let seed = sg.expand(&[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0].map(int));
    let result = rank_and_cartan(&sg, &[seed], &SearchBudget::default()).unwrap();
    assert_eq!(result.rank(), 2);
    assert_eq!(result.verify(&sg, &SearchBudget::default()), Ok(()));
}

#[test]
fn empty_seed_is_allowed() {
    let so9 = so_basis(9).unwrap();
    let result = rank_and_cartan(&so9, &[], &SearchBudget::default()).unwrap();
    assert_eq!(result.rank(), 4);
    assert_eq!(result.elements[0].element.coords(), &unit_vector(36, 0)[..]);
}
