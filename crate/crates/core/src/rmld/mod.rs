//! Recursive maximum-likelihood decoding of kernel phases.
//!
//! A kernel phase is decoded over a binary tree of code sections. Every node
//! covers a window `[x, y)` of positions and splits at `z = (x + y) / 2`.
//! The node's punctured code decomposes into rows supported inside the child
//! windows (the child shortened codes), straddling rows completing the
//! shortened code of the window (`w`), and rows completing the punctured
//! code (`v`). A node outputs one running maximum per `v` coset; the table
//! mapping `(w, v)` selections to child coset indices `(a, b)` is
//! precomputed, and maximization over `w` happens inside the node.
//!
//! The per-phase cost ledger charges each non-leaf node
//! `2^(|w|+|v|) + sum_{k=1..|w|} 2^k` (candidate sums plus the pairwise
//! maxima), leaves cost nothing, and each phase pays one extra operation for
//! the final soft output. When reuse is enabled, a later phase whose
//! top-level structure is compatible with an earlier one is charged a flat
//! cost of one operation.
//!
//! Reuse marking is structural: the decoder always executes each phase's own
//! section tree, so soft outputs are bit-for-bit identical whether or not
//! reuse is enabled; only the cost ledger and the reuse map change.

mod build;
mod decode;

use crate::gf2::{BinMatrix, RowBasis};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};

pub use build::{build_decoder, build_punctured, build_wvab, extend_kernel, kernel_complexity};
pub use decode::{decode_kernel, decode_phase};

/// A kernel with the rows above `phase` dropped and a marker column
/// appended: the first remaining row carries a 1, all others 0.
#[derive(Clone, Debug)]
pub struct ExtendedKernel {
    /// Phase index the extension was built for.
    pub phase: usize,
    /// Size of the originating kernel.
    pub l: usize,
    /// `(l - phase) x (l + 1)` generator matrix.
    pub matrix: BinMatrix,
}

/// Decomposition of a section's punctured code.
///
/// All rows live in window coordinates (length `y - x`). `s_left` and
/// `s_right` generate the child shortened codes, `w` completes them to the
/// window's shortened code, and `v` completes the result to the punctured
/// code. Leaves keep every matrix empty.
#[derive(Clone, Debug)]
pub struct SectionParts {
    /// Window start (inclusive).
    pub x: usize,
    /// Window end (exclusive).
    pub y: usize,
    /// Basis of the left child's shortened code.
    pub s_left: BinMatrix,
    /// Basis of the right child's shortened code.
    pub s_right: BinMatrix,
    /// Straddling rows completing the window's shortened code.
    pub w: BinMatrix,
    /// Rows completing the punctured code.
    pub v: BinMatrix,
}

impl SectionParts {
    /// Stacked generator `[s_left; s_right; w; v]` of the punctured code.
    pub fn punctured_generator(&self) -> BinMatrix {
        let mut rows = Vec::new();
        for m in [&self.s_left, &self.s_right, &self.w, &self.v] {
            for r in 0..m.rows() {
                rows.push(m.row(r));
            }
        }
        if rows.is_empty() {
            BinMatrix::zeros(0, self.y - self.x)
        } else {
            BinMatrix::from_rows(&rows).expect("window rows share a length")
        }
    }
}

/// Mapping from `(w, v)` row selections of a node to child coset indices.
///
/// Entry `r` (with `r = dec([w, v])`, leftmost bit most significant)
/// holds the left child's output index `a` and the right child's `b`.
#[derive(Clone, Debug)]
pub struct WvabTable {
    /// Number of `w` rows.
    pub w_len: usize,
    /// Number of `v` rows.
    pub v_len: usize,
    /// Coefficients of the parent `[w; v]` rows' left halves in the left
    /// child's stacked basis (shortened rows first, then `v` rows).
    pub g_hat: BinMatrix,
    /// Same for the right halves in the right child's basis.
    pub g_tilde: BinMatrix,
    /// `2^(w_len + v_len)` entries of `(a, b)` indices.
    pub entries: Vec<(u32, u32)>,
}

/// A node of the section tree.
#[derive(Clone, Debug)]
pub struct SectionNode {
    /// Window start.
    pub x: usize,
    /// Window end.
    pub y: usize,
    /// Split point `(x + y) / 2`; equals `x` for leaves.
    pub z: usize,
    /// Punctured-code decomposition of the window.
    pub parts: SectionParts,
    /// Output index width: the node emits `2^v_len` running maxima.
    pub v_len: usize,
    /// Dimension of the window's shortened code handled at or below this
    /// node. For a leaf this is 1 exactly when the weight-1 codeword on the
    /// window position exists.
    pub s_len: usize,
    /// Selection table; `None` for leaves.
    pub wvab: Option<WvabTable>,
    /// Child nodes; `None` for leaves.
    pub children: Option<Box<(SectionNode, SectionNode)>>,
}

impl SectionNode {
    /// True when the node covers a single position.
    pub fn is_leaf(&self) -> bool {
        self.y - self.x == 1
    }

    /// Number of table entries a decode of this node evaluates.
    pub fn table_len(&self) -> usize {
        self.wvab.as_ref().map_or(0, |t| t.entries.len())
    }
}

/// One decodable phase: the section tree over `[0, l)`.
#[derive(Clone, Debug)]
pub struct PhaseTree {
    /// Root node covering the whole kernel window.
    pub root: SectionNode,
    /// Earlier phase whose top-level maximizations cover this phase's, if
    /// reuse was enabled and a compatible source exists.
    pub reuse_source: Option<usize>,
}

/// Per-phase cost ledger.
///
/// `per_phase[i]` is the cost of phase `i`'s section tree excluding the one
/// final output operation; a reused phase shows 0. The total adds one per
/// phase, so `total = sum(per_phase) + l` with reuse off, and a reused phase
/// contributes exactly one operation overall.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityReport {
    /// Tree cost per phase.
    pub per_phase: Vec<u64>,
    /// Total decode cost of all phases.
    pub total: u64,
    /// Whether reuse was applied when building the ledger.
    pub reuse: bool,
}

/// An immutable phase decoder for one kernel.
///
/// Decoding takes only shared references plus per-call scratch, so a built
/// decoder can be shared freely across threads.
#[derive(Clone, Debug)]
pub struct RmldDecoder {
    pub(crate) kernel: BinMatrix,
    pub(crate) l: usize,
    pub(crate) phases: Vec<PhaseTree>,
    pub(crate) reuse_enabled: bool,
    pub(crate) complexity: ComplexityReport,
}

impl RmldDecoder {
    /// Kernel size.
    pub fn l(&self) -> usize {
        self.l
    }

    /// The kernel being decoded.
    pub fn kernel(&self) -> &BinMatrix {
        &self.kernel
    }

    /// Phase trees, indexed by phase.
    pub fn phases(&self) -> &[PhaseTree] {
        &self.phases
    }

    /// Whether the decoder was built with reuse marking.
    pub fn reuse_enabled(&self) -> bool {
        self.reuse_enabled
    }

    /// Reuse source per phase (`None` when the phase stands alone).
    pub fn reuse_map(&self) -> Vec<Option<usize>> {
        self.phases.iter().map(|p| p.reuse_source).collect()
    }
}

/// Cost of one node's combination step: `2^(|w|+|v|)` candidate sums plus a
/// `sum_{k=1..|w|} 2^k` maximization tree.
pub fn comb_complexity(w_len: usize, v_len: usize) -> u64 {
    let sums = 1u64 << (w_len + v_len);
    let maxes = (1u64 << (w_len + 1)) - 2;
    sums + maxes
}

/// Reads the cost ledger of a built decoder.
pub fn decoder_complexity(decoder: &RmldDecoder) -> ComplexityReport {
    decoder.complexity.clone()
}

pub(crate) fn validate_kernel(kernel: &BinMatrix) -> Result<usize> {
    let l = kernel.rows();
    if kernel.cols() != l {
        return Err(Error::DimensionMismatch(format!(
            "kernel must be square, got {}x{}",
            l,
            kernel.cols()
        )));
    }
    if !(2..=32).contains(&l) {
        return Err(Error::UnsupportedSize {
            got: l,
            supported: "2..=32".to_string(),
        });
    }
    if kernel.rank() != l {
        return Err(Error::RankDeficient);
    }
    Ok(l)
}

pub(crate) fn row_space(m: &BinMatrix) -> RowBasis {
    RowBasis::from_matrix(m)
}
