//! Total vertex colorings viewed as weak partitions into color classes.

use graph_core::VertexSet;
use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ColoringError {
    ColorOutOfRange { vertex: usize, color: usize, m: usize },
    NoClasses,
}

impl fmt::Display for ColoringError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ColoringError::ColorOutOfRange { vertex, color, m } => {
                write!(f, "vertex {vertex} has color {color}, outside 1..={m}")
            }
            ColoringError::NoClasses => write!(f, "a coloring needs at least one class"),
        }
    }
}

impl std::error::Error for ColoringError {}

/// A total map vertex -> color in 1..=m. Classes may be empty, so this is a
/// weak partition of the vertex set into m classes.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    m: usize,
    colors: Vec<usize>,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, m: usize) -> Result<Self, ColoringError> {
        if m == 0 {
            return Err(ColoringError::NoClasses);
        }
        for (vertex, &color) in colors.iter().enumerate() {
            if color == 0 || color > m {
                return Err(ColoringError::ColorOutOfRange { vertex, color, m });
            }
        }
        Ok(Coloring { m, colors })
    }

    /// All vertices in one class.
    pub fn constant(n: usize, color: usize, m: usize) -> Self {
        Self::new(vec![color; n], m).expect("constant coloring is valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.colors.len()
    }

    /// Number of classes (the weak-partition size m).
    #[inline]
    pub fn num_classes(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn color_of(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Vertices of class `i` (1-based).
    pub fn class(&self, i: usize) -> VertexSet {
        debug_assert!(i >= 1 && i <= self.m);
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == i)
            .map(|(v, _)| v)
            .collect()
    }

    /// Applies a color permutation: `perm[old - 1] = new`.
    pub fn permuted(&self, perm: &[usize]) -> Coloring {
        debug_assert_eq!(perm.len(), self.m);
        let colors = self.colors.iter().map(|&c| perm[c - 1]).collect();
        Coloring::new(colors, self.m).expect("permutation preserves range")
    }

    /// The permutation swapping two colors, leaving the rest in place.
    pub fn swapped(&self, a: usize, b: usize) -> Coloring {
        let mut perm: Vec<usize> = (1..=self.m).collect();
        perm.swap(a - 1, b - 1);
        self.permuted(&perm)
    }

    /// Builds an m-coloring of a host graph on `n` vertices from per-vertex
    /// assignments. Every vertex must be assigned exactly once.
    pub fn assemble(n: usize, m: usize, parts: &[(usize, usize)]) -> Self {
        let mut colors = vec![0usize; n];
        for &(v, c) in parts {
            debug_assert_eq!(colors[v], 0, "vertex {v} assigned twice");
            colors[v] = c;
        }
        Coloring::new(colors, m).expect("assembled coloring total and in range")
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring(m={}, {:?})", self.m, self.colors)
    }
}
