//! Simplices in Eilenberg–Zilber normal form and monotone operators between ordinals.

/// Index of a nondegenerate generator inside its simplicial set.
pub type Gen = usize;

/// A simplex written as a nondegenerate generator composed with a monotone surjection.
///
/// `surj` has length `n + 1` for an `n`-simplex and maps `[n]` onto `[dim base]`.
/// The identity surjection marks the generator itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Simplex {
    pub base: Gen,
    pub surj: Vec<u8>,
}

impl Simplex {
    pub fn generator(base: Gen, dim: usize) -> Self {
        Simplex { base, surj: identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.surj.len() - 1
    }

    pub fn base_dim(&self) -> usize {
        self.surj.last().map_or(0, |&x| x as usize)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.dim() == self.base_dim()
    }

    /// Degeneracy indices, strictly decreasing: the simplex is `s_{i_1} ... s_{i_k}` of its base.
    pub fn degens(&self) -> Vec<usize> {
        let mut out: Vec<usize> = (0..self.dim())
            .filter(|&j| self.surj[j] == self.surj[j + 1])
            .collect();
        out.reverse();
        out
    }

    /// Inverse of [`Simplex::degens`]; `None` when the list is not an admissible normal form.
    pub fn from_degens(base: Gen, base_dim: usize, degens: &[usize]) -> Option<Self> {
        let n = base_dim + degens.len();
        if degens.windows(2).any(|w| w[0] <= w[1]) || degens.iter().any(|&i| i >= n) {
            return None;
        }
        let mut surj = Vec::with_capacity(n + 1);
        surj.push(0u8);
        for j in 0..n {
            let step = if degens.contains(&j) { 0 } else { 1 };
            surj.push(surj[j] + step);
        }
        (surj[n] as usize == base_dim).then_some(Simplex { base, surj })
    }

    /// Apply the degeneracy `s_i`.
    pub fn degenerate(&self, i: usize) -> Self {
        let mut surj = self.surj.clone();
        surj.insert(i, self.surj[i]);
        Simplex { base: self.base, surj }
    }
}

pub fn identity(n: usize) -> Vec<u8> {
    (0..=n as u8).collect()
}

/// The coface `δ_i : [n-1] → [n]` skipping `i`.
pub fn coface(n: usize, i: usize) -> Vec<u8> {
    (0..=n as u8).filter(|&j| j as usize != i).collect()
}

/// The codegeneracy `σ_i : [n+1] → [n]` hitting `i` twice.
pub fn codegeneracy(n: usize, i: usize) -> Vec<u8> {
    (0..=n + 1)
        .map(|j| if j <= i { j as u8 } else { (j - 1) as u8 })
        .collect()
}

/// `outer ∘ inner` for monotone maps given as value lists.
pub fn compose(outer: &[u8], inner: &[u8]) -> Vec<u8> {
    inner.iter().map(|&j| outer[j as usize]).collect()
}

/// Bitmask of the image of a monotone map.
pub fn image_mask(theta: &[u8]) -> u64 {
    theta.iter().fold(0u64, |m, &j| m | (1u64 << j))
}

/// Corestriction of a monotone map onto its image, as a surjection.
pub fn corestrict(theta: &[u8]) -> Vec<u8> {
    let mask = image_mask(theta);
    theta
        .iter()
        .map(|&j| (mask & ((1u64 << j) - 1)).count_ones() as u8)
        .collect()
}

/// Increasing list of the elements of a mask.
pub fn mask_elements(mask: u64) -> Vec<u8> {
    (0..64u8).filter(|&j| mask & (1u64 << j) != 0).collect()
}

/// All monotone surjections `[n] → [k]`, in lexicographic order.
pub fn surjections(n: usize, k: usize) -> Vec<Vec<u8>> {
    if k > n {
        return Vec::new();
    }
    use itertools::Itertools;
    (0..n)
        .combinations(k)
        .map(|steps| {
            let mut s = vec![0u8];
            for j in 0..n {
                let up = steps.contains(&j) as u8;
                s.push(s[j] + up);
            }
            s
        })
        .collect()
}

/// All monotone maps `[k] → [n]`.
pub fn monotone_maps(k: usize, n: usize) -> Vec<Vec<u8>> {
    fn go(k: usize, n: u8, from: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k + 1 {
            out.push(cur.clone());
            return;
        }
        for v in from..=n {
            cur.push(v);
            go(k, n, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, n as u8, 0, &mut Vec::new(), &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}
