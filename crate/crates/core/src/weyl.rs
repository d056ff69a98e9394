//! Root systems, simple Weyl reflections as integer matrices, element
//! composition and order, and brute-force root generation.
//!
//! Matrix convention: row `i` of a [`WeylElement`] holds the coordinates of
//! the image of the simple root `alpha_{i+1}` in the simple-root basis.
//! Words compose by left-to-right matrix products; this is the convention
//! that makes `compose([3,5,7,2,4,6,8])` on E8 reproduce the reference
//! matrix row-for-row.

use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;

pub const ORDER_CAP: usize = 1000;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Plus,
    Minus,
}

/// A root in the simple-root basis, exact integer coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Root(pub Vec<i64>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0i64; rank];
        v[i - 1] = 1;
        Root(v)
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, s: i64) -> Root {
        Root(self.0.iter().map(|x| s * x).collect())
    }

    /// Image under a Weyl element: row vector times action matrix.
    pub fn apply(&self, w: &WeylElement) -> Root {
        let n = self.0.len();
        Root(
            (0..n)
                .map(|j| (0..n).map(|i| self.0[i] * w.matrix[i][j]).sum())
                .collect(),
        )
    }

    /// Height: sum of coordinates.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, x) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x)?;
        }
        write!(f, ")")
    }
}

/// Element of the Weyl group as an integer action matrix plus the generator
/// word it was composed from.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeylElement {
    pub matrix: Vec<Vec<i64>>,
    pub word: Vec<usize>,
}

impl WeylElement {
    pub fn identity(rank: usize) -> WeylElement {
        WeylElement {
            matrix: (0..rank)
                .map(|i| (0..rank).map(|j| (i == j) as i64).collect())
                .collect(),
            word: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix
            .iter()
            .enumerate()
            .all(|(i, row)| row.iter().enumerate().all(|(j, &x)| x == (i == j) as i64))
    }

    /// Matrix product; `self` acts first, then `rhs`.
    pub fn mul(&self, rhs: &WeylElement) -> WeylElement {
        let n = self.rank();
        let mut word = self.word.clone();
        word.extend_from_slice(&rhs.word);
        WeylElement {
            matrix: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).map(|k| self.matrix[i][k] * rhs.matrix[k][j]).sum())
                        .collect()
                })
                .collect(),
            word,
        }
    }

    pub fn pow(&self, e: usize) -> WeylElement {
        let mut acc = WeylElement::identity(self.rank());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Smallest n >= 1 with w^n = identity; errors past [`ORDER_CAP`].
    pub fn order(&self) -> Result<usize, Error> {
        let mut acc = self.clone();
        for n in 1..=ORDER_CAP {
            if acc.is_identity() {
                return Ok(n);
            }
            acc = acc.mul(self);
        }
        Err(Error::OrderCapExceeded)
    }

    /// Inverse, assuming finite order.
    pub fn inverse(&self) -> Result<WeylElement, Error> {
        let n = self.order()?;
        Ok(self.pow(n - 1))
    }
}

/// A finite root system defined by its Cartan matrix with a proper
/// bicoloration of the Dynkin diagram.
#[derive(Clone, Debug, Serialize)]
pub struct RootSystem {
    pub name: String,
    pub cartan: Vec<Vec<i64>>,
    pub adjacency: Vec<(usize, usize)>,
    pub coloring: Vec<Color>,
    pub rank: usize,
    pub coxeter_number: usize,
    #[serde(skip)]
    roots: BTreeSet<Root>,
}

/// On-disk form of a custom system: {"cartan": [[...]], "minus": [vertices]}.
#[derive(Deserialize)]
pub struct CustomSystemSpec {
    pub cartan: Vec<Vec<i64>>,
    #[serde(default)]
    pub minus: Option<Vec<usize>>,
}

fn chain_cartan(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

fn e_series_cartan(n: usize) -> Vec<Vec<i64>> {
    // chain alpha_2 - alpha_3 - ... - alpha_n, with alpha_1 attached to alpha_4
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    for i in 1..n - 1 {
        a[i][i + 1] = -1;
        a[i + 1][i] = -1;
    }
    a[0][3] = -1;
    a[3][0] = -1;
    a
}

fn d_series_cartan(n: usize) -> Vec<Vec<i64>> {
    // chain 1..n-1 with vertex n attached to n-2
    let mut a = chain_cartan(n);
    a[n - 2][n - 1] = 0;
    a[n - 1][n - 2] = 0;
    a[n - 3][n - 1] = -1;
    a[n - 1][n - 3] = -1;
    a
}

impl RootSystem {
    /// Build a catalog system by name: A{n}, D{n} (n >= 4), E6, E7, E8, B2, G2.
    pub fn catalog(name: &str) -> Result<RootSystem, Error> {
        let cartan = match name {
            "E6" => e_series_cartan(6),
            "E7" => e_series_cartan(7),
            "E8" => e_series_cartan(8),
            "B2" => vec![vec![2, -1], vec![-2, 2]],
            "G2" => vec![vec![2, -1], vec![-3, 2]],
            _ => {
                if let Some(ns) = name.strip_prefix('A') {
                    let n: usize = ns.parse().map_err(|_| Error::UnknownSystem(name.into()))?;
                    if n == 0 {
                        return Err(Error::UnknownSystem(name.into()));
                    }
                    chain_cartan(n)
                } else if let Some(ns) = name.strip_prefix('D') {
                    let n: usize = ns.parse().map_err(|_| Error::UnknownSystem(name.into()))?;
                    if n < 4 {
                        return Err(Error::UnknownSystem(name.into()));
                    }
                    d_series_cartan(n)
                } else {
                    return Err(Error::UnknownSystem(name.into()));
                }
            }
        };
        RootSystem::from_cartan(name, cartan, None)
    }

    /// Build from an explicit Cartan matrix; `minus` picks the minus-colored
    /// vertices (1-based), defaulting to a BFS bicoloration with vertex 1 minus.
    pub fn from_cartan(
        name: &str,
        cartan: Vec<Vec<i64>>,
        minus: Option<&[usize]>,
    ) -> Result<RootSystem, Error> {
        let n = cartan.len();
        if n == 0 || cartan.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan("matrix is empty or not square".into()));
        }
        for i in 0..n {
            if cartan[i][i] != 2 {
                return Err(Error::InvalidCartan("diagonal entries must be 2".into()));
            }
            for j in 0..n {
                if i != j {
                    if cartan[i][j] > 0 {
                        return Err(Error::InvalidCartan(
                            "off-diagonal entries must be <= 0".into(),
                        ));
                    }
                    if (cartan[i][j] == 0) != (cartan[j][i] == 0) {
                        return Err(Error::InvalidCartan(
                            "zero pattern must be symmetric".into(),
                        ));
                    }
                }
            }
        }
        let adjacency: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| cartan[i][j] != 0)
            .map(|(i, j)| (i + 1, j + 1))
            .collect();

        let coloring = match minus {
            Some(minus) => {
                let mut coloring = vec![Color::Plus; n];
                for &v in minus {
                    if v == 0 || v > n {
                        return Err(Error::IndexOutOfRange(v, n));
                    }
                    coloring[v - 1] = Color::Minus;
                }
                coloring
            }
            None => bipartite_coloring(n, &adjacency)?,
        };
        for &(a, b) in &adjacency {
            if coloring[a - 1] == coloring[b - 1] {
                return Err(Error::ImproperColoring(a, b));
            }
        }

        let mut rs = RootSystem {
            name: name.to_string(),
            cartan,
            adjacency,
            coloring,
            rank: n,
            coxeter_number: 0,
            roots: BTreeSet::new(),
        };
        rs.roots = rs.generate_roots_bounded()?;
        if rs.roots.len() % n != 0 {
            return Err(Error::InvalidCartan("root count not divisible by rank".into()));
        }
        rs.coxeter_number = rs.roots.len() / n;
        Ok(rs)
    }

    pub fn load_custom(path: &std::path::Path) -> Result<RootSystem, Error> {
        let text = std::fs::read_to_string(path)?;
        let spec: CustomSystemSpec = serde_json::from_str(&text)?;
        RootSystem::from_cartan("custom", spec.cartan, spec.minus.as_deref())
    }

    pub fn color(&self, i: usize) -> Color {
        self.coloring[i - 1]
    }

    /// Sign c_i: +1 on plus-colored vertices, -1 on minus.
    pub fn sign(&self, i: usize) -> i64 {
        match self.color(i) {
            Color::Plus => 1,
            Color::Minus => -1,
        }
    }

    pub fn vertices_of_color(&self, color: Color) -> Vec<usize> {
        (1..=self.rank)
            .filter(|&i| self.color(i) == color)
            .collect()
    }

    /// The simple reflection sigma_i: alpha_j -> alpha_j - A[j][i] alpha_i.
    pub fn simple_reflection(&self, i: usize) -> Result<WeylElement, Error> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexOutOfRange(i, self.rank));
        }
        let n = self.rank;
        let mut m = WeylElement::identity(n).matrix;
        for j in 0..n {
            m[j][i - 1] -= self.cartan[j][i - 1];
        }
        Ok(WeylElement {
            matrix: m,
            word: vec![i],
        })
    }

    /// Left-to-right product of simple reflections.
    pub fn compose(&self, word: &[usize]) -> Result<WeylElement, Error> {
        let mut acc = WeylElement::identity(self.rank);
        for &i in word {
            acc = acc.mul(&self.simple_reflection(i)?);
        }
        Ok(acc)
    }

    /// All roots, by closure of the simple roots under the simple reflections.
    pub fn all_roots(&self) -> &BTreeSet<Root> {
        &self.roots
    }

    fn generate_roots_bounded(&self) -> Result<BTreeSet<Root>, Error> {
        let n = self.rank;
        let bound = 1000.max(4 * n * n);
        let mut roots: BTreeSet<Root> = (1..=n).map(|i| Root::simple(n, i)).collect();
        let mut frontier: Vec<Root> = roots.iter().cloned().collect();
        while let Some(r) = frontier.pop() {
            for i in 0..n {
                // sigma_i(v) = v - (sum_j v_j A[j][i]) alpha_i
                let coef: i64 = (0..n).map(|j| r.0[j] * self.cartan[j][i]).sum();
                let mut img = r.0.clone();
                img[i] -= coef;
                let img = Root(img);
                if roots.insert(img.clone()) {
                    if roots.len() > bound {
                        return Err(Error::NotFiniteType);
                    }
                    frontier.push(img);
                }
            }
        }
        Ok(roots)
    }

    /// Highest root (unique maximal height); its coordinates are the marks.
    pub fn highest_root(&self) -> Root {
        self.roots
            .iter()
            .max_by_key(|r| (r.height(), (*r).clone()))
            .expect("nonempty root system")
            .clone()
    }
}

fn bipartite_coloring(n: usize, adjacency: &[(usize, usize)]) -> Result<Vec<Color>, Error> {
    let mut color: Vec<Option<Color>> = vec![None; n];
    let mut nbrs: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(a, b) in adjacency {
        nbrs[a - 1].push(b - 1);
        nbrs[b - 1].push(a - 1);
    }
    for start in 0..n {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(Color::Minus);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let cv = color[v].unwrap();
            let flip = match cv {
                Color::Plus => Color::Minus,
                Color::Minus => Color::Plus,
            };
            for &u in &nbrs[v] {
                match color[u] {
                    None => {
                        color[u] = Some(flip);
                        queue.push_back(u);
                    }
                    Some(cu) if cu == cv => return Err(Error::ImproperColoring(v + 1, u + 1)),
                    _ => {}
                }
            }
        }
    }
    Ok(color.into_iter().map(|c| c.unwrap()).collect())
}
