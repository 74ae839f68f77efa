/// Resource bounds for the operations that can blow up combinatorially.
///
/// Every bound is configurable; the defaults are tuned for desk-scale
/// inputs (a few dozen facets). Exceeding a guard is reported as
/// [`Error::SizeGuard`](crate::Error::SizeGuard) or a dedicated
/// `GuardExceeded` verdict, never as a wrong answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Cap on full face enumeration (barycentric subdivision, homology,
    /// configuration spaces).
    pub max_faces: usize,
    /// Vertex bound for the exhaustive d-Leray check (2^n subcomplexes).
    pub leray_vertices: usize,
    /// Distinct intermediate complexes explored by the collapsibility search.
    pub collapse_states: usize,
    /// Facet bound for the consecutive-arrangement certificate search.
    pub arrangement_facets: usize,
    /// Node budget for path/cycle searches (induced cycles, Kuratowski).
    pub search_nodes: usize,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            max_faces: 2_000_000,
            leray_vertices: 16,
            collapse_states: 50_000,
            arrangement_facets: 12,
            search_nodes: 2_000_000,
        }
    }
}

impl Guards {
    /// A single scalar budget, as set by the CLI `--guard N` flag.
    ///
    /// `N` replaces the face-enumeration, collapse-state and search-node
    /// budgets; the structural bounds (d-Leray vertices, arrangement facets)
    /// keep their defaults.
    pub fn with_budget(n: usize) -> Self {
        Guards {
            max_faces: n,
            collapse_states: n,
            search_nodes: n,
            ..Guards::default()
        }
    }
}
