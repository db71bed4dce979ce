use std::collections::HashMap;
use std::hash::Hash;

use super::set::{Builder, SimplicialSet};
use super::simplex::Simplex;
use crate::error::{Error, Result};

/// A simplicial set rebuilt from explicit degreewise simplex lists.
pub struct Levels {
    pub set: SimplicialSet,
    /// Normal form of each listed element, per level.
    pub normal: Vec<Vec<Simplex>>,
    /// For each generator, its `(level, position)` in the input.
    pub origin: Vec<(usize, usize)>,
}

/// Renormalize degreewise data into generators and faces.
///
/// `levels[n]` lists every `n`-simplex; `face(n, i, x)` and `degen(n, i, x)` must land in the
/// adjacent level lists. Degeneracies out of the top level are never requested.
pub fn from_levels<E, F, D, N>(
    levels: &[Vec<E>],
    face: F,
    degen: D,
    name: N,
    truncation: Option<usize>,
) -> Result<Levels>
where
    E: Clone + Eq + Hash,
    F: Fn(usize, usize, &E) -> E,
    D: Fn(usize, usize, &E) -> E,
    N: Fn(usize, &E) -> String,
{
    let index: Vec<HashMap<&E, usize>> = levels
        .iter()
        .map(|lv| lv.iter().enumerate().map(|(k, e)| (e, k)).collect())
        .collect();
    let locate = |n: usize, e: &E, what: &str| -> Result<usize> {
        index[n]
            .get(e)
            .copied()
            .ok_or_else(|| Error::Structure(format!("{what} leaves the listed level {n}")))
    };
    let mut b = Builder::new();
    b.truncation = truncation;
    if let Some(top) = levels.len().checked_sub(1) {
        b.bound = Some(top);
    }
    let mut normal: Vec<Vec<Simplex>> = Vec::with_capacity(levels.len());
    let mut origin = Vec::new();
    for n in 0..levels.len() {
        let mut degenerate: Vec<Option<(usize, usize)>> = vec![None; levels[n].len()];
        if n > 0 {
            for (y, e) in levels[n - 1].iter().enumerate() {
                for i in 0..n {
                    let x = locate(n, &degen(n - 1, i, e), "a degeneracy")?;
                    degenerate[x].get_or_insert((i, y));
                }
            }
        }
        let mut nf = Vec::with_capacity(levels[n].len());
        for (k, e) in levels[n].iter().enumerate() {
            if let Some((i, y)) = degenerate[k] {
                nf.push(normal[n - 1][y].degenerate(i));
                continue;
            }
            let faces = if n == 0 {
                Vec::new()
            } else {
                let mut fs = Vec::with_capacity(n + 1);
                for i in 0..=n {
                    fs.push(normal[n - 1][locate(n - 1, &face(n, i, e), "a face")?].clone());
                }
                fs
            };
            let g = b.add_fresh(name(n, e), faces)?;
            origin.push((n, k));
            nf.push(Simplex::generator(g, n));
        }
        normal.push(nf);
    }
    Ok(Levels { set: b.build()?, normal, origin })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Δ[1] given by its monotone sequences.
    #[test]
    fn interval_from_sequences() {
        let levels: Vec<Vec<Vec<u8>>> = (0..4)
            .map(|n| crate::sset::simplex::monotone_maps(n, 1))
            .collect();
        let lv = from_levels(
            &levels,
            |_, i, x: &Vec<u8>| {
                let mut y = x.clone();
                y.remove(i);
                y
            },
            |_, i, x: &Vec<u8>| {
                let mut y = x.clone();
                y.insert(i, x[i]);
                y
            },
            |_, x| x.iter().map(|d| d.to_string()).collect(),
            None,
        )
        .unwrap();
        assert_eq!(lv.set.f_vector(), vec![2, 1]);
        assert_eq!(lv.normal[3].len(), 5);
        assert_eq!(lv.normal[3][1].degens(), vec![1, 0]);
    }
}
