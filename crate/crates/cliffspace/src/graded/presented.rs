use num_traits::One;

use crate::linalg::{Eliminator, Rational, SparseMatrix, SparseVec, Subspace};
use crate::par;
use crate::{Error, Result};

use super::{GradedAlgebra, HilbertSeries};

/// Generators-and-relations description of a graded algebra: `ngen`
/// generators and relation subspaces of tensor powers `V^{⊗degree}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraPresentation {
    ngen: usize,
    relations: Vec<(usize, Subspace)>,
}

impl AlgebraPresentation {
    pub fn new(ngen: usize, relations: Vec<(usize, Subspace)>) -> Result<Self> {
        if ngen == 0 {
            return Err(Error::InvalidInput("need at least one generator".into()));
        }
        for (degree, space) in &relations {
            if *degree < 2 {
                return Err(Error::InvalidInput(format!(
                    "relation degree {degree} < 2"
                )));
            }
            let ambient = ngen.pow(*degree as u32);
            if space.ambient_dim() != ambient {
                return Err(Error::DimensionMismatch(space.ambient_dim(), ambient));
            }
        }
        Ok(AlgebraPresentation { ngen, relations })
    }

    pub fn ngen(&self) -> usize {
        self.ngen
    }

    pub fn relations(&self) -> &[(usize, Subspace)] {
        &self.relations
    }

    /// The degree-`d` component of the two-sided ideal: the span of all
    /// placements `V^{⊗a} ⊗ R_e ⊗ V^{⊗b}`, computed iteratively as
    /// `I_d = V ⊗ I_{d−1} + Σ_e R_e ⊗ V^{⊗(d−e)}`.
    pub fn ideal_component(&self, d: usize) -> Subspace {
        let n = self.ngen;
        let mut ideal = Subspace::zero(1); // degree-0 placeholder
        for degree in 0..=d {
            let ambient = n.pow(degree as u32);
            let mut vectors: Vec<SparseVec> = Vec::new();
            if degree > 0 {
                let prev_ambient = n.pow((degree - 1) as u32);
                for v in ideal.basis() {
                    for a in 0..n {
                        vectors.push(
                            v.iter()
                                .map(|(i, c)| (a * prev_ambient + i, c.clone()))
                                .collect(),
                        );
                    }
                }
            }
            for (e, space) in &self.relations {
                if *e > degree {
                    continue;
                }
                let tail = n.pow((degree - e) as u32);
                for r in space.basis() {
                    for w in 0..tail {
                        vectors.push(
                            r.iter().map(|(u, c)| (u * tail + w, c.clone())).collect(),
                        );
                    }
                }
            }
            ideal = Subspace::from_spanning(ambient, vectors);
        }
        ideal
    }

    /// `dim A_d = ngen^d − dim I_d`.
    pub fn component_dim(&self, d: usize) -> usize {
        self.ngen.pow(d as u32) - self.ideal_component(d).dim()
    }

    /// Hilbert series through the cap, via the quotient table (agrees with
    /// `component_dim` degree by degree; the small degrees are cross-checked
    /// in tests through both routes).
    pub fn hilbert(&self, cap: usize) -> Result<HilbertSeries> {
        let table = PresentedAlgebra::build(self.clone(), cap)?;
        Ok(GradedAlgebra::hilbert(&table, cap))
    }
}

struct Level {
    basis_words: Vec<Vec<u8>>,
    /// Normal form of every word of this length, indexed by word rank.
    nf: Vec<SparseVec>,
}

/// Graded components of `T(V)/⟨R⟩` built degree by degree: in each degree
/// the relation placements are eliminated inside `V ⊗ A_{d−1}` and the basis
/// is chosen as the first complementary coordinates in the lex word order,
/// which makes every table deterministic.
pub struct PresentedAlgebra {
    presentation: AlgebraPresentation,
    torus_graded: bool,
    levels: Vec<Level>,
}

impl PresentedAlgebra {
    pub fn build(presentation: AlgebraPresentation, max_degree: usize) -> Result<Self> {
        let n = presentation.ngen;
        let torus_graded = presentation
            .relations
            .iter()
            .all(|(e, space)| space.basis().iter().all(|v| content_homogeneous(n, *e, v)));
        let mut levels = vec![Level {
            basis_words: vec![Vec::new()],
            nf: vec![vec![(0, Rational::one())]],
        }];
        for d in 1..=max_degree {
            let prev = &levels[d - 1];
            let prev_dim = prev.basis_words.len();
            let ambient = n * prev_dim;

            // relation placements with the relation flush left; all other
            // placements are already zero in V ⊗ A_{d−1}
            let mut elim = Eliminator::new();
            for (e, space) in &presentation.relations {
                if *e > d {
                    continue;
                }
                let tail_len = d - e;
                let tail_count = n.pow(tail_len as u32);
                for r in space.basis() {
                    for w in 0..tail_count {
                        let mut coords: Vec<(usize, Rational)> = Vec::new();
                        for (u, c) in r {
                            // word u of length e: first letter and suffix
                            let head = u / n.pow((*e - 1) as u32);
                            let suffix_rank =
                                (u % n.pow((*e - 1) as u32)) * tail_count + w;
                            for (j, x) in &prev.nf[suffix_rank] {
                                coords.push((head * prev_dim + j, c * x));
                            }
                        }
                        let vector = crate::linalg::sparse_from_pairs(coords);
                        if !vector.is_empty() {
                            elim.insert(&vector);
                        }
                    }
                }
            }

            // basis = free coordinates (a, j) in lex order
            let mut basis_words = Vec::with_capacity(ambient - elim.rank());
            let mut free_position = vec![usize::MAX; ambient];
            for coord in 0..ambient {
                if !elim.is_pivot(coord) {
                    free_position[coord] = basis_words.len();
                    let mut word = Vec::with_capacity(d);
                    word.push((coord / prev_dim) as u8);
                    word.extend_from_slice(&prev.basis_words[coord % prev_dim]);
                    basis_words.push(word);
                }
            }

            // normal form of every word of length d
            let word_count = n.pow(d as u32);
            let indices: Vec<usize> = (0..word_count).collect();
            let nf: Vec<SparseVec> = par::map_collect(indices, |rank| {
                let head = rank / n.pow((d - 1) as u32);
                let suffix = rank % n.pow((d - 1) as u32);
                let lifted: SparseVec = prev.nf[suffix]
                    .iter()
                    .map(|(j, c)| (head * prev_dim + j, c.clone()))
                    .collect();
                let reduced = elim.reduce(&lifted);
                reduced
                    .into_iter()
                    .map(|(coord, c)| (free_position[coord], c))
                    .collect::<SparseVec>()
            });

            levels.push(Level { basis_words, nf });
        }
        Ok(PresentedAlgebra {
            presentation,
            torus_graded,
            levels,
        })
    }

    pub fn presentation(&self) -> &AlgebraPresentation {
        &self.presentation
    }

    pub fn basis_words(&self, d: usize) -> &[Vec<u8>] {
        &self.levels[d].basis_words
    }

    /// Coordinates of a word in the degree-`len(word)` basis.
    pub fn normal_form(&self, word: &[u8]) -> &SparseVec {
        let n = self.presentation.ngen;
        let rank = word
            .iter()
            .fold(0usize, |acc, &a| acc * n + a as usize);
        &self.levels[word.len()].nf[rank]
    }

    pub fn is_torus_graded(&self) -> bool {
        self.torus_graded
    }
}

impl GradedAlgebra for PresentedAlgebra {
    fn ngens(&self) -> usize {
        self.presentation.ngen
    }

    fn max_degree(&self) -> usize {
        self.levels.len() - 1
    }

    fn dim(&self, d: usize) -> usize {
        self.levels.get(d).map_or(0, |l| l.basis_words.len())
    }

    fn weights(&self, d: usize) -> Option<Vec<Vec<u8>>> {
        if !self.torus_graded {
            return None;
        }
        Some(
            self.levels[d]
                .basis_words
                .iter()
                .map(|w| crate::clifford::word_content(self.presentation.ngen, w))
                .collect(),
        )
    }

    fn mult_matrix(&self, d1: usize, d2: usize) -> SparseMatrix {
        assert!(d1 + d2 <= self.max_degree());
        let dim1 = self.dim(d1);
        let dim2 = self.dim(d2);
        let mut columns = Vec::with_capacity(dim1 * dim2);
        for i1 in 0..dim1 {
            for i2 in 0..dim2 {
                let mut word = self.levels[d1].basis_words[i1].clone();
                word.extend_from_slice(&self.levels[d2].basis_words[i2]);
                columns.push(self.normal_form(&word).clone());
            }
        }
        SparseMatrix::from_columns(self.dim(d1 + d2), &columns)
    }
}

fn content_homogeneous(n: usize, degree: usize, v: &SparseVec) -> bool {
    let mut contents = v.iter().map(|(u, _)| {
        let mut rank = *u;
        let mut content = vec![0u8; n];
        for _ in 0..degree {
            content[rank % n] += 1;
            rank /= n;
        }
        content
    });
    match contents.next() {
        None => true,
        Some(first) => contents.all(|c| c == first),
    }
}

impl std::fmt::Debug for PresentedAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let dims: Vec<usize> = (0..self.levels.len()).map(|d| self.dim(d)).collect();
        f.debug_struct("PresentedAlgebra")
            .field("ngen", &self.presentation.ngen)
            .field("dims", &dims)
            .field("torus_graded", &self.torus_graded)
            .finish()
    }
}
