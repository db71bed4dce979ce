use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::sset::{Gen, SimplicialMap, SimplicialSet, Simplex};

/// A head-to-tail wedge of nondegenerate simplices of dimension at least one.
///
/// Positions `0..=length()` number the vertices of the wedge; bead `k` occupies the
/// positions from the sum of the earlier dimensions up to that sum plus its own.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace {
    pub start: Gen,
    pub end: Gen,
    pub beads: Vec<Gen>,
    pub dims: Vec<usize>,
}

/// A necklace with a flag `J(τ) = T_0 ⊆ … ⊆ T_m = V(τ)` of position sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FlaggedNecklace {
    pub necklace: Necklace,
    pub flag: Vec<u64>,
}

/// Highest position a necklace may use; position sets are bit masks.
pub const MAX_LENGTH: usize = 62;

impl Necklace {
    /// The empty necklace at a vertex.
    pub fn empty(v: Gen) -> Self {
        Necklace { start: v, end: v, beads: Vec::new(), dims: Vec::new() }
    }

    pub fn new(x: &SimplicialSet, start: Gen, beads: Vec<Gen>) -> Result<Self> {
        let mut cur = start;
        let mut dims = Vec::with_capacity(beads.len());
        for &b in &beads {
            let d = x.gen_dim(b);
            if d == 0 || x.first_vertex(b) != cur {
                return Err(Error::Structure(format!("bead `{}` does not continue the necklace", x.name(b))));
            }
            cur = x.last_vertex(b);
            dims.push(d);
        }
        let n = Necklace { start, end: cur, beads, dims };
        if n.length() > MAX_LENGTH {
            return Err(Error::Parameter(format!("necklace longer than {MAX_LENGTH}")));
        }
        Ok(n)
    }

    pub fn length(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Position of the first vertex of each bead, followed by the last position.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = vec![0];
        for d in &self.dims {
            out.push(out.last().unwrap() + d);
        }
        out
    }

    /// `J(τ)`: the positions where beads meet, endpoints included.
    pub fn joins(&self) -> u64 {
        self.offsets().iter().fold(0, |m, &o| m | (1 << o))
    }

    /// `V(τ)`: every position.
    pub fn positions(&self) -> u64 {
        (1u64 << (self.length() + 1)) - 1
    }

    /// The vertex of `x` at a position.
    pub fn vertex_at(&self, x: &SimplicialSet, pos: usize) -> Gen {
        let offs = self.offsets();
        for (k, &b) in self.beads.iter().enumerate() {
            if pos <= offs[k + 1] {
                return x.vertex_of(&x.gen(b), pos - offs[k]);
            }
        }
        self.start
    }

    pub fn show(&self, x: &SimplicialSet) -> String {
        if self.beads.is_empty() {
            return format!("({})", x.name(self.start));
        }
        let parts: Vec<String> = self.beads.iter().map(|&b| format!("({})", x.name(b))).collect();
        parts.join("∨")
    }

    /// Every flag of degree `m`, in a fixed order.
    pub fn flags(&self, m: usize) -> Vec<Vec<u64>> {
        let joins = self.joins();
        let free: Vec<usize> = (0..=self.length()).filter(|p| joins & (1 << p) == 0).collect();
        if m == 0 {
            return if free.is_empty() { vec![vec![joins]] } else { Vec::new() };
        }
        let mut out = Vec::new();
        let mut level = vec![1usize; free.len()];
        loop {
            let flag = (0..=m)
                .map(|k| {
                    free.iter()
                        .zip(&level)
                        .filter(|(_, &l)| l <= k)
                        .fold(joins, |acc, (&p, _)| acc | (1 << p))
                })
                .collect();
            out.push(flag);
            let mut i = 0;
            while i < level.len() && level[i] == m {
                level[i] = 1;
                i += 1;
            }
            if i == level.len() {
                break;
            }
            level[i] += 1;
        }
        out
    }
}

fn show_mask(mask: u64) -> String {
    let items: Vec<String> = (0..64).filter(|p| mask & (1 << p) != 0).map(|p| p.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

impl FlaggedNecklace {
    pub fn degree(&self) -> usize {
        self.flag.len() - 1
    }

    /// Checks the flag against the necklace.
    pub fn validate(&self) -> Result<()> {
        let n = &self.necklace;
        let ok = !self.flag.is_empty()
            && self.flag[0] == n.joins()
            && *self.flag.last().unwrap() == n.positions()
            && self.flag.windows(2).all(|w| w[0] & !w[1] == 0);
        if ok {
            Ok(())
        } else {
            Err(Error::Structure("flag does not run from the joins to all positions".into()))
        }
    }

    pub fn show(&self, x: &SimplicialSet) -> String {
        let mut s = self.necklace.show(x);
        if self.degree() > 0 {
            let sets: Vec<String> = self.flag.iter().map(|&m| show_mask(m)).collect();
            let _ = write!(s, "[{}]", sets.join("⊂"));
        }
        s
    }

    /// Drop `T_i` (`0 < i < m`), or refine (`i = 0`), or restrict (`i = m`).
    ///
    /// Refining splits every bead at the interior positions of `T_1`; restricting keeps
    /// only the positions of `T_{m-1}`. Either may create degenerate beads, which
    /// [`normalize`] removes.
    pub fn flag_face(&self, x: &SimplicialSet, i: usize) -> FlaggedNecklace {
        let m = self.degree();
        assert!(m > 0 && i <= m, "no face d_{i} in degree {m}");
        let n = &self.necklace;
        let offs = n.offsets();
        if 0 < i && i < m {
            let mut flag = self.flag.clone();
            flag.remove(i);
            return FlaggedNecklace { necklace: n.clone(), flag };
        }
        if i == 0 {
            let cuts = self.flag[1];
            let mut raw = Vec::new();
            for (k, &b) in n.beads.iter().enumerate() {
                let inside: Vec<usize> = (offs[k]..=offs[k + 1]).filter(|p| cuts & (1 << p) != 0).collect();
                for w in inside.windows(2) {
                    let theta: Vec<u8> = (w[0] - offs[k]..=w[1] - offs[k]).map(|t| t as u8).collect();
                    raw.push(x.apply(&x.gen(b), &theta));
                }
            }
            return normalize(x, n.start, &raw, &self.flag[1..]);
        }
        let keep = self.flag[m - 1];
        let rank = |p: usize| (keep & ((1u64 << p) - 1)).count_ones() as usize;
        let mut raw = Vec::new();
        for (k, &b) in n.beads.iter().enumerate() {
            let theta: Vec<u8> = (offs[k]..=offs[k + 1])
                .filter(|p| keep & (1 << p) != 0)
                .map(|p| (p - offs[k]) as u8)
                .collect();
            raw.push(x.apply(&x.gen(b), &theta));
        }
        let flag: Vec<u64> = self.flag[..m]
            .iter()
            .map(|&t| (0..64).filter(|p| t & (1 << p) != 0).fold(0, |a, p| a | (1 << rank(p))))
            .collect();
        normalize(x, n.start, &raw, &flag)
    }

    /// Repeat `T_i`.
    pub fn flag_degen(&self, i: usize) -> FlaggedNecklace {
        let mut flag = self.flag.clone();
        flag.insert(i, self.flag[i]);
        FlaggedNecklace { necklace: self.necklace.clone(), flag }
    }

    /// `[τ, τ']`: beads side by side, flags united after shifting the second.
    pub fn concat(&self, other: &FlaggedNecklace) -> Result<FlaggedNecklace> {
        if self.necklace.end != other.necklace.start || self.degree() != other.degree() {
            return Err(Error::Composition("necklaces are not concatenable".into()));
        }
        let shift = self.necklace.length();
        if shift + other.necklace.length() > MAX_LENGTH {
            return Err(Error::Parameter(format!("necklace longer than {MAX_LENGTH}")));
        }
        let mut necklace = self.necklace.clone();
        necklace.end = other.necklace.end;
        necklace.beads.extend(&other.necklace.beads);
        necklace.dims.extend(&other.necklace.dims);
        let flag = self.flag.iter().zip(&other.flag).map(|(a, b)| a | (b << shift)).collect();
        Ok(FlaggedNecklace { necklace, flag })
    }

    /// Image under a simplicial map, renormalized in the target.
    pub fn pushforward(&self, f: &SimplicialMap) -> FlaggedNecklace {
        let raw: Vec<Simplex> = self.necklace.beads.iter().map(|&b| f.image(b).clone()).collect();
        normalize(&f.target, f.vertex_image(self.necklace.start), &raw, &self.flag)
    }

    /// The beads `first..last` as a necklace of their own, positions renumbered from zero.
    pub fn slice(&self, x: &SimplicialSet, first: usize, last: usize) -> FlaggedNecklace {
        let n = &self.necklace;
        let offs = n.offsets();
        let (lo, hi) = (offs[first], offs[last]);
        let start = n.vertex_at(x, lo);
        let end = n.vertex_at(x, hi);
        let necklace = Necklace {
            start,
            end,
            beads: n.beads[first..last].to_vec(),
            dims: n.dims[first..last].to_vec(),
        };
        let window = ((1u64 << (hi + 1)) - 1) & !((1u64 << lo) - 1);
        let flag = self.flag.iter().map(|&t| (t & window) >> lo).collect();
        FlaggedNecklace { necklace, flag }
    }
}

/// Rebuild a necklace from beads that may be degenerate.
///
/// Each raw bead is replaced by its nondegenerate base, positions are pushed along the
/// degeneracies, and beads collapsing to a vertex disappear.
pub fn normalize(x: &SimplicialSet, start: Gen, raw: &[Simplex], flag: &[u64]) -> FlaggedNecklace {
    let total: usize = raw.iter().map(Simplex::dim).sum();
    let mut map = vec![0usize; total + 1];
    let (mut o, mut q) = (0usize, 0usize);
    let mut beads = Vec::new();
    let mut dims = Vec::new();
    let mut end = start;
    for s in raw {
        for (i, &t) in s.surj.iter().enumerate() {
            map[o + i] = q + t as usize;
        }
        let d = s.base_dim();
        if d > 0 {
            beads.push(s.base);
            dims.push(d);
            end = x.last_vertex(s.base);
        }
        o += s.dim();
        q += d;
    }
    let flag = flag
        .iter()
        .map(|&t| (0..=total).filter(|p| t & (1 << p) != 0).fold(0, |a, p| a | (1u64 << map[p])))
        .collect();
    FlaggedNecklace { necklace: Necklace { start, end, beads, dims }, flag }
}

/// All necklaces from `from` to `to`, the empty one included when they agree.
pub fn enumerate_necklaces(x: &SimplicialSet, from: Gen, to: Gen) -> Result<Vec<Necklace>> {
    for v in [from, to] {
        if v >= x.len() || x.gen_dim(v) != 0 {
            return Err(Error::Parameter(format!("generator {v} is not a vertex")));
        }
    }
    let edges: Vec<(Gen, Gen, Gen)> = (0..x.len())
        .filter(|&g| x.gen_dim(g) > 0)
        .map(|g| (x.first_vertex(g), g, x.last_vertex(g)))
        .collect();
    let reach = |start: Gen, forward: bool| {
        let mut seen = HashSet::from([start]);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &(a, _, b) in &edges {
                let (s, t) = if forward { (a, b) } else { (b, a) };
                if s == v && seen.insert(t) {
                    stack.push(t);
                }
            }
        }
        seen
    };
    let ahead = reach(from, true);
    let behind = reach(to, false);
    let live: HashSet<Gen> = ahead.intersection(&behind).copied().collect();
    let mut out = Vec::new();
    if live.is_empty() {
        return Ok(out);
    }
    let mut path: Vec<Gen> = Vec::new();
    let mut on_path = vec![false; x.len()];
    on_path[from] = true;
    #[allow(clippy::too_many_arguments)]
    fn dfs(
        x: &SimplicialSet,
        edges: &[(Gen, Gen, Gen)],
        live: &HashSet<Gen>,
        cur: Gen,
        to: Gen,
        from: Gen,
        path: &mut Vec<Gen>,
        on_path: &mut Vec<bool>,
        out: &mut Vec<Necklace>,
    ) -> Result<()> {
        if cur == to {
            out.push(Necklace::new(x, from, path.clone())?);
        }
        for &(a, g, b) in edges {
            if a != cur || !live.contains(&b) {
                continue;
            }
            if on_path[b] {
                return Err(Error::Infinite(format!(
                    "vertex `{}` lies on a cycle between the endpoints",
                    x.name(b)
                )));
            }
            on_path[b] = true;
            path.push(g);
            dfs(x, edges, live, b, to, from, path, on_path, out)?;
            path.pop();
            on_path[b] = false;
        }
        Ok(())
    }
    dfs(x, &edges, &live, from, to, from, &mut path, &mut on_path, &mut out)?;
    Ok(out)
}
