use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::rep::{joint_kernel, RepModule};
use crate::sparse::SpVec;
use crate::superlin::GradedSpace;

/// All permutations of `0..k` with their signs, in lexicographic order.
fn signed_permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(Vec::new(), false)];
    }
    let mut out = Vec::new();
    for first in 0..k {
        for (rest, neg) in signed_permutations(k - 1) {
            let mut p = vec![first];
            p.extend(rest.iter().map(|&r| if r >= first { r + 1 } else { r }));
            // moving `first` to the front costs `first` transpositions
            out.push((p, neg ^ (first % 2 == 1)));
        }
    }
    out
}

/// `xi_k = sum_sigma sgn(sigma) e_sigma(1) (x) ... (x) e_sigma(k)` as a dense
/// vector of length `dim^k`.
pub fn xi_vector(space: &GradedSpace, k: usize) -> Result<Vec<Rat>> {
    if k < 1 || k > space.n() {
        return Err(Error::InvalidArgument(format!("k = {k} outside 1..={}", space.n())));
    }
    let nn = space.dim();
    let mut out = vec![Rat::zero(); nn.pow(k as u32)];
    for (p, neg) in signed_permutations(k) {
        let idx = p.iter().fold(0, |acc, &a| acc * nn + a);
        out[idx] = Rat::sign(neg);
    }
    Ok(out)
}

/// Nonzero coordinates of a dense vector.
pub fn sparse_of(v: &[Rat]) -> SpVec<Rat> {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i as u32, x.clone()))
        .collect()
}

/// Basis of the vectors killed by every `t_ij(u)` with `i < j`, each with
/// first nonzero coordinate 1.
pub fn find_highest_vectors(rep: &RepModule) -> Result<Vec<SpVec<Rat>>> {
    let nn = rep.space().dim();
    let pairs: Vec<(usize, usize)> = (1..=nn)
        .flat_map(|i| (i + 1..=nn).map(move |j| (i, j)))
        .collect();
    joint_kernel(rep, &pairs)
}
