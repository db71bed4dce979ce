use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use super::simplex::{
    coface, codegeneracy, compose, corestrict, image_mask, mask_elements, surjections,
    Gen, Simplex,
};
use crate::error::{Error, Result};

/// Generators of dimension above this are rejected; face tables grow as `2^(n+1)`.
pub const MAX_DIM: usize = 20;

/// A finite simplicial set presented by its nondegenerate simplices.
pub struct SimplicialSet {
    names: Vec<String>,
    dims: Vec<usize>,
    faces: Vec<Vec<Simplex>>,
    by_dim: Vec<Vec<Gen>>,
    lookup: HashMap<String, Gen>,
    /// `subfaces[g][mask]` is the face of `g` spanned by the vertices in `mask`.
    subfaces: Vec<Vec<Simplex>>,
    bound: Option<usize>,
    truncation: Option<usize>,
    face_index: Mutex<HashMap<usize, Arc<FaceIndex>>>,
}

/// All `n`-simplices of a set keyed by their face tuple.
pub type FaceIndex = HashMap<Vec<Simplex>, Vec<Simplex>>;

impl fmt::Debug for SimplicialSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimplicialSet")
            .field("f_vector", &self.f_vector())
            .field("truncation", &self.truncation)
            .finish()
    }
}

impl SimplicialSet {
    pub fn empty() -> Self {
        Builder::new().build().expect("empty set is valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, g: Gen) -> &str {
        &self.names[g]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn gen_dim(&self, g: Gen) -> usize {
        self.dims[g]
    }

    pub fn faces(&self, g: Gen) -> &[Simplex] {
        &self.faces[g]
    }

    pub fn find(&self, name: &str) -> Option<Gen> {
        self.lookup.get(name).copied()
    }

    /// Generators of dimension `n`, in construction order.
    pub fn generators(&self, n: usize) -> &[Gen] {
        self.by_dim.get(n).map_or(&[], |v| v.as_slice())
    }

    pub fn vertices(&self) -> &[Gen] {
        self.generators(0)
    }

    /// Largest dimension of a generator, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.dims.iter().copied().max()
    }

    /// Declared dimension bound; never below [`SimplicialSet::dim`].
    pub fn bound(&self) -> Option<usize> {
        self.bound
    }

    /// Levels above the truncation are not part of the object.
    pub fn truncation(&self) -> Option<usize> {
        self.truncation
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.by_dim.iter().map(Vec::len).collect()
    }

    pub fn gen(&self, g: Gen) -> Simplex {
        Simplex::generator(g, self.dims[g])
    }

    /// Apply a simplicial operator `θ : [k] → [n]` to an `n`-simplex.
    pub fn apply(&self, x: &Simplex, theta: &[u8]) -> Simplex {
        let comp = compose(&x.surj, theta);
        let f = &self.subfaces[x.base][image_mask(&comp) as usize];
        let eps = corestrict(&comp);
        Simplex { base: f.base, surj: compose(&f.surj, &eps) }
    }

    pub fn face(&self, x: &Simplex, i: usize) -> Simplex {
        self.apply(x, &coface(x.dim(), i))
    }

    pub fn degen(&self, x: &Simplex, i: usize) -> Simplex {
        self.apply(x, &codegeneracy(x.dim(), i))
    }

    pub fn all_faces(&self, x: &Simplex) -> Vec<Simplex> {
        (0..=x.dim()).map(|i| self.face(x, i)).collect()
    }

    /// The face of generator `g` spanned by the vertex subset `mask`.
    pub fn subface(&self, g: Gen, mask: u64) -> &Simplex {
        &self.subfaces[g][mask as usize]
    }

    pub fn vertex_of(&self, x: &Simplex, j: usize) -> Gen {
        self.apply(x, &[j as u8]).base
    }

    pub fn vertex_list(&self, x: &Simplex) -> Vec<Gen> {
        (0..=x.dim()).map(|j| self.vertex_of(x, j)).collect()
    }

    pub fn first_vertex(&self, g: Gen) -> Gen {
        self.subfaces[g][1].base
    }

    pub fn last_vertex(&self, g: Gen) -> Gen {
        self.subfaces[g][1usize << self.dims[g]].base
    }

    /// Every `n`-simplex, degenerate ones included.
    pub fn all_simplices(&self, n: usize) -> Vec<Simplex> {
        let mut out = Vec::new();
        for k in 0..=n.min(self.by_dim.len().saturating_sub(1)) {
            let surjs = surjections(n, k);
            for &g in self.generators(k) {
                for s in &surjs {
                    out.push(Simplex { base: g, surj: s.clone() });
                }
            }
        }
        out
    }

    /// Number of `n`-simplices, degenerate ones included.
    pub fn count_simplices(&self, n: usize) -> usize {
        (0..self.by_dim.len())
            .filter(|&k| k <= n)
            .map(|k| self.by_dim[k].len() * super::simplex::binomial(n, k))
            .sum()
    }

    /// Shared index of `n`-simplices by faces, built on first use.
    pub fn face_index(&self, n: usize) -> Arc<FaceIndex> {
        let mut cache = self.face_index.lock().expect("face index lock");
        cache
            .entry(n)
            .or_insert_with(|| {
                let mut idx: FaceIndex = HashMap::new();
                for x in self.all_simplices(n) {
                    let key = if n == 0 { Vec::new() } else { self.all_faces(&x) };
                    idx.entry(key).or_default().push(x);
                }
                Arc::new(idx)
            })
            .clone()
    }

    /// Human-readable form: the base name, prefixed by its degeneracy word.
    pub fn show(&self, x: &Simplex) -> String {
        let mut s = String::new();
        for i in x.degens() {
            s.push_str(&format!("s{i}"));
        }
        if s.is_empty() {
            self.names[x.base].clone()
        } else {
            format!("{s}({})", self.names[x.base])
        }
    }

    /// Parse a simplex from a generator name and a degeneracy list.
    pub fn simplex(&self, name: &str, degens: &[usize]) -> Result<Simplex> {
        let g = self
            .find(name)
            .ok_or_else(|| Error::Structure(format!("unknown generator `{name}`")))?;
        Simplex::from_degens(g, self.dims[g], degens).ok_or_else(|| {
            Error::Structure(format!("degeneracies {degens:?} are not in normal form"))
        })
    }

    /// Sub-simplicial set on the kept generators, with its inclusion data.
    ///
    /// Returns the new set and, for every new generator, the old one it came from.
    pub fn restrict(&self, keep: impl Fn(Gen) -> bool) -> Result<(SimplicialSet, Vec<Gen>)> {
        let mut b = Builder::new();
        let mut new_of = vec![usize::MAX; self.len()];
        let mut old_of = Vec::new();
        for n in 0..self.by_dim.len() {
            for &g in self.generators(n) {
                if !keep(g) {
                    continue;
                }
                let mut faces = Vec::new();
                for f in &self.faces[g] {
                    let nb = new_of[f.base];
                    if nb == usize::MAX {
                        return Err(Error::Structure(format!(
                            "kept generator `{}` has a face outside the subset",
                            self.names[g]
                        )));
                    }
                    faces.push(Simplex { base: nb, surj: f.surj.clone() });
                }
                new_of[g] = b.add(self.names[g].clone(), faces)?;
                old_of.push(g);
            }
        }
        Ok((b.build()?, old_of))
    }

    /// Generators of dimension at most `n`.
    pub fn skeleton(&self, n: usize) -> SimplicialSet {
        let (s, _) = self.restrict(|g| self.dims[g] <= n).expect("skeleta are closed");
        s
    }

    /// The same presentation with a truncation marker attached.
    pub fn with_truncation(mut self, t: Option<usize>) -> Self {
        self.truncation = t;
        self
    }

    /// The opposite simplicial set: vertex order reversed in every simplex.
    pub fn opposite(&self) -> SimplicialSet {
        let mut b = Builder::new();
        for g in 0..self.len() {
            let n = self.dims[g];
            let faces = (0..self.faces[g].len())
                .map(|i| {
                    let f = &self.faces[g][n - i];
                    let k = f.base_dim() as u8;
                    let surj = f.surj.iter().rev().map(|&v| k - v).collect();
                    Simplex { base: f.base, surj }
                })
                .collect();
            b.add(self.names[g].clone(), faces).expect("opposite of a valid set");
        }
        b.bound = self.bound;
        b.truncation = self.truncation;
        b.build().expect("opposite of a valid set")
    }
}

/// Incremental constructor; faces must refer to generators added earlier.
#[derive(Default)]
pub struct Builder {
    names: Vec<String>,
    dims: Vec<usize>,
    faces: Vec<Vec<Simplex>>,
    lookup: HashMap<String, Gen>,
    pub bound: Option<usize>,
    pub truncation: Option<usize>,
}

impl Builder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn add(&mut self, name: impl Into<String>, faces: Vec<Simplex>) -> Result<Gen> {
        let name = name.into();
        if self.lookup.contains_key(&name) {
            return Err(Error::Structure(format!("duplicate generator name `{name}`")));
        }
        let n = faces.len().saturating_sub(1);
        if faces.len() == 1 {
            return Err(Error::Structure(format!("generator `{name}` has a single face")));
        }
        if n > MAX_DIM {
            return Err(Error::Parameter(format!("dimension {n} exceeds {MAX_DIM}")));
        }
        for f in &faces {
            if f.base >= self.names.len() {
                return Err(Error::Structure(format!(
                    "face of `{name}` refers to a generator not yet declared"
                )));
            }
            let bd = self.dims[f.base];
            let ok = f.surj.len() == n
                && f.surj[0] == 0
                && f.surj.windows(2).all(|w| w[1] == w[0] || w[1] == w[0] + 1)
                && f.base_dim() == bd;
            if !ok {
                return Err(Error::Structure(format!(
                    "face of `{name}` is not a {}-simplex in normal form",
                    n - 1
                )));
            }
        }
        let g = self.names.len();
        self.lookup.insert(name.clone(), g);
        self.names.push(name);
        self.dims.push(n);
        self.faces.push(faces);
        Ok(g)
    }

    pub fn vertex(&mut self, name: impl Into<String>) -> Result<Gen> {
        self.add(name, Vec::new())
    }

    /// Like [`Builder::add`] but appends primes until the name is free.
    pub fn add_fresh(&mut self, name: impl Into<String>, faces: Vec<Simplex>) -> Result<Gen> {
        let mut name = name.into();
        while self.lookup.contains_key(&name) {
            name.push('\'');
        }
        self.add(name, faces)
    }

    pub fn build(self) -> Result<SimplicialSet> {
        let count = self.names.len();
        let top = self.dims.iter().copied().max();
        let mut by_dim = vec![Vec::new(); top.map_or(0, |d| d + 1)];
        for g in 0..count {
            by_dim[self.dims[g]].push(g);
        }
        let mut set = SimplicialSet {
            names: self.names,
            dims: self.dims,
            faces: self.faces,
            by_dim,
            lookup: self.lookup,
            subfaces: Vec::with_capacity(count),
            bound: match (self.bound, top) {
                (Some(b), Some(t)) => Some(b.max(t)),
                (b, t) => b.or(t),
            },
            truncation: self.truncation,
            face_index: Mutex::new(HashMap::new()),
        };
        for g in 0..count {
            set.check_identities(g)?;
            let table = set.face_table(g);
            set.subfaces.push(table);
        }
        Ok(set)
    }
}

impl SimplicialSet {
    fn check_identities(&self, g: Gen) -> Result<()> {
        let faces = &self.faces[g];
        let n = self.dims[g];
        if n < 2 {
            return Ok(());
        }
        for j in 1..=n {
            for i in 0..j {
                let lhs = self.apply(&faces[j], &coface(n - 1, i));
                let rhs = self.apply(&faces[i], &coface(n - 1, j - 1));
                if lhs != rhs {
                    return Err(Error::Identity { generator: self.names[g].clone(), i, j });
                }
            }
        }
        Ok(())
    }

    fn face_table(&self, g: Gen) -> Vec<Simplex> {
        let n = self.dims[g];
        let full = (1usize << (n + 1)) - 1;
        let mut table = vec![Simplex { base: g, surj: Vec::new() }; full + 1];
        table[full] = Simplex::generator(g, n);
        for (mask, slot) in table.iter_mut().enumerate().take(full).skip(1) {
            let missing = (0..=n).rev().find(|&i| mask & (1 << i) == 0).expect("proper subset");
            let theta: Vec<u8> = mask_elements(mask as u64)
                .into_iter()
                .map(|j| if (j as usize) > missing { j - 1 } else { j })
                .collect();
            *slot = self.apply(&self.faces[g][missing], &theta);
        }
        table
    }
}

/// `Δ[k]`-style generator name for a vertex subset.
pub fn subset_name(elems: &[u8], n: usize) -> String {
    if n < 10 {
        elems.iter().map(|v| v.to_string()).collect()
    } else {
        elems.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> SimplicialSet {
        let mut b = Builder::new();
        let v: Vec<Gen> = (0..3).map(|i| b.vertex(i.to_string()).unwrap()).collect();
        let e = |b: &mut Builder, name: &str, x: Gen, y: Gen| {
            b.add(name, vec![Simplex::generator(y, 0), Simplex::generator(x, 0)]).unwrap()
        };
        let e01 = e(&mut b, "01", v[0], v[1]);
        let e02 = e(&mut b, "02", v[0], v[2]);
        let e12 = e(&mut b, "12", v[1], v[2]);
        b.add(
            "012",
            vec![Simplex::generator(e12, 1), Simplex::generator(e02, 1), Simplex::generator(e01, 1)],
        )
        .unwrap();
        b.build().unwrap()
    }

    #[test]
    fn face_tables_follow_faces() {
        let t = triangle();
        let top = t.find("012").unwrap();
        assert_eq!(t.name(t.subface(top, 0b101).base), "02");
        assert_eq!(t.vertex_list(&t.gen(top)), vec![0, 1, 2]);
        let s = t.degen(&t.gen(t.find("01").unwrap()), 1);
        assert_eq!(t.face(&s, 2).base, t.find("01").unwrap());
        assert!(t.face(&s, 1).is_nondegenerate());
        assert_eq!(t.face(&s, 0), Simplex { base: 1, surj: vec![0, 0] });
    }

    #[test]
    fn identity_violation_is_named() {
        let mut b = Builder::new();
        let v: Vec<Gen> = (0..3).map(|i| b.vertex(i.to_string()).unwrap()).collect();
        let e01 = b.add("01", vec![Simplex::generator(v[1], 0), Simplex::generator(v[0], 0)]).unwrap();
        let e12 = b.add("12", vec![Simplex::generator(v[2], 0), Simplex::generator(v[1], 0)]).unwrap();
        b.add("bad", vec![Simplex::generator(e12, 1), Simplex::generator(e01, 1), Simplex::generator(e01, 1)])
            .unwrap();
        match b.build() {
            Err(Error::Identity { generator, .. }) => assert_eq!(generator, "bad"),
            other => panic!("expected identity error, got {other:?}"),
        }
    }

    #[test]
    fn counts_and_opposite() {
        let t = triangle();
        assert_eq!(t.count_simplices(2), t.all_simplices(2).len());
        assert_eq!(t.count_simplices(3), 3 + 3 * 3 + 3);
        let op = t.opposite();
        let e = op.find("01").unwrap();
        assert_eq!(op.name(op.first_vertex(e)), "1");
        assert_eq!(op.f_vector(), t.f_vector());
    }

    #[test]
    fn face_index_groups_by_faces() {
        let t = triangle();
        let idx = t.face_index(1);
        let v0 = Simplex::generator(0, 0);
        let key = vec![v0.clone(), v0];
        assert_eq!(idx[&key].len(), 1);
    }
}
