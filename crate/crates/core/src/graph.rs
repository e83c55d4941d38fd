//! Literal-clause incidence graphs.
//!
//! A [`LigGraph`] has one node per literal and one per clause, with an edge
//! between a literal and every clause it occurs in. The LIG⁺ variant also
//! links the two literal nodes of each variable.
//!
//! Literal nodes use a fixed 0-based numbering: the positive literal of
//! variable `v` is node `2(v-1)`, the negative literal is `2(v-1)+1`. Negating
//! a literal is therefore `index ^ 1`. Clause `j` is node `2·num_vars + j` in
//! the combined numbering used by [`LigGraph::adjacency`].

use std::io::Write;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::formula::{Clause, Formula, Literal, Var};

pub const SCHEMA_NAME: &str = "lig-graph";
pub const SCHEMA_VERSION: u32 = 1;
pub const LITERAL_INDEX_CONVENTION: &str =
    "positive literal of variable v is 2*(v-1), negative literal is 2*(v-1)+1";

#[derive(Error, Debug)]
pub enum GraphError {
    #[error("edge ({literal}, {clause}) out of range for {num_literals} literals and {num_clauses} clauses")]
    DanglingEdge {
        literal: usize,
        clause: usize,
        num_literals: usize,
        num_clauses: usize,
    },
    #[error("duplicate edge ({literal}, {clause})")]
    DuplicateEdge { literal: usize, clause: usize },
    #[error("unsupported document: {0}")]
    Schema(String),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

/// Node index of a literal.
#[inline]
pub fn literal_index(lit: Literal) -> usize {
    2 * lit.var().pos() + lit.is_negated() as usize
}

/// Literal of a node index.
#[inline]
pub fn literal_of(index: usize) -> Literal {
    Literal::new(Var::new((index / 2) as u32 + 1), index % 2 == 1)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LigGraph {
    num_vars: u32,
    num_clauses: usize,
    /// `(literal index, clause index)`, clause-major in clause literal order.
    cl_edges: Vec<(usize, usize)>,
    plus: bool,
}

/// Builds the LIG (or LIG⁺ when `plus`) of a formula. Duplicate clauses get
/// their own clause nodes.
pub fn build_lig(formula: &Formula, plus: bool) -> LigGraph {
    let cl_edges = formula
        .clauses()
        .iter()
        .enumerate()
        .flat_map(|(j, c)| c.literals().iter().map(move |&l| (literal_index(l), j)))
        .collect();
    LigGraph {
        num_vars: formula.num_vars(),
        num_clauses: formula.num_clauses(),
        cl_edges,
        plus,
    }
}

impl LigGraph {
    /// Validating constructor.
    pub fn new(
        num_vars: u32,
        num_clauses: usize,
        cl_edges: Vec<(usize, usize)>,
        plus: bool,
    ) -> Result<LigGraph, GraphError> {
        let num_literals = 2 * num_vars as usize;
        let mut seen = std::collections::HashSet::new();
        for &(literal, clause) in &cl_edges {
            if literal >= num_literals || clause >= num_clauses {
                return Err(GraphError::DanglingEdge {
                    literal,
                    clause,
                    num_literals,
                    num_clauses,
                });
            }
            if !seen.insert((literal, clause)) {
                return Err(GraphError::DuplicateEdge { literal, clause });
            }
        }
        Ok(LigGraph {
            num_vars,
            num_clauses,
            cl_edges,
            plus,
        })
    }

    pub fn num_vars(&self) -> u32 {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.num_clauses
    }

    pub fn num_literal_nodes(&self) -> usize {
        2 * self.num_vars as usize
    }

    pub fn num_nodes(&self) -> usize {
        self.num_literal_nodes() + self.num_clauses
    }

    pub fn is_plus(&self) -> bool {
        self.plus
    }

    pub fn cl_edges(&self) -> &[(usize, usize)] {
        &self.cl_edges
    }

    /// The literal-literal links of LIG⁺, empty for a plain LIG.
    pub fn var_edges(&self) -> Vec<(usize, usize)> {
        if self.plus {
            (0..self.num_vars as usize).map(|v| (2 * v, 2 * v + 1)).collect()
        } else {
            Vec::new()
        }
    }

    /// Adjacency lists over the combined node numbering (literals first,
    /// then clauses).
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let offset = self.num_literal_nodes();
        let mut adj = vec![Vec::new(); self.num_nodes()];
        for &(l, c) in &self.cl_edges {
            adj[l].push(offset + c);
            adj[offset + c].push(l);
        }
        for (a, b) in self.var_edges() {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Literal-by-clause incidence matrix, row-major (`2·num_vars` rows).
    pub fn incidence_matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.num_clauses]; self.num_literal_nodes()];
        for &(l, c) in &self.cl_edges {
            m[l][c] = 1;
        }
        m
    }

    /// Rebuilds the formula. Clauses follow clause-node order; a clause node
    /// without edges becomes the empty clause.
    pub fn to_formula(&self) -> Formula {
        let mut lits: Vec<Vec<Literal>> = vec![Vec::new(); self.num_clauses];
        for &(l, c) in &self.cl_edges {
            lits[c].push(literal_of(l));
        }
        let clauses = lits.into_iter().map(Clause::new).collect();
        Formula::new(self.num_vars, clauses).expect("edges validated on construction")
    }
}

/// Where an exported graph came from.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub source: Option<String>,
    pub chain: Option<String>,
}

/// On-disk form of a [`LigGraph`]; field order is the serialized order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub schema: String,
    pub version: u32,
    pub literal_index: String,
    pub num_vars: u32,
    pub num_clauses: usize,
    pub var_edges: bool,
    pub edges: Vec<[usize; 2]>,
    pub variable_links: Vec<[usize; 2]>,
    pub provenance: Provenance,
}

impl GraphDocument {
    pub fn new(graph: &LigGraph, provenance: Provenance) -> GraphDocument {
        GraphDocument {
            schema: SCHEMA_NAME.to_string(),
            version: SCHEMA_VERSION,
            literal_index: LITERAL_INDEX_CONVENTION.to_string(),
            num_vars: graph.num_vars,
            num_clauses: graph.num_clauses,
            var_edges: graph.plus,
            edges: graph.cl_edges.iter().map(|&(l, c)| [l, c]).collect(),
            variable_links: graph.var_edges().into_iter().map(|(a, b)| [a, b]).collect(),
            provenance,
        }
    }

    pub fn to_graph(&self) -> Result<LigGraph, GraphError> {
        if self.schema != SCHEMA_NAME || self.version != SCHEMA_VERSION {
            return Err(GraphError::Schema(format!(
                "{} v{}",
                self.schema, self.version
            )));
        }
        let graph = LigGraph::new(
            self.num_vars,
            self.num_clauses,
            self.edges.iter().map(|&[l, c]| (l, c)).collect(),
            self.var_edges,
        )?;
        let links: Vec<(usize, usize)> =
            self.variable_links.iter().map(|&[a, b]| (a, b)).collect();
        if links != graph.var_edges() {
            return Err(GraphError::Schema(
                "variable_links disagree with var_edges flag".to_string(),
            ));
        }
        Ok(graph)
    }
}

/// Serializes a graph as one line of JSON. The output is byte-stable for a
/// given graph and provenance.
pub fn graph_to_json(graph: &LigGraph, provenance: &Provenance) -> String {
    let doc = GraphDocument::new(graph, provenance.clone());
    let mut s = serde_json::to_string(&doc).expect("graph document serializes");
    s.push('\n');
    s
}

pub fn export_graph<W: Write>(
    graph: &LigGraph,
    provenance: &Provenance,
    mut sink: W,
) -> Result<(), GraphError> {
    sink.write_all(graph_to_json(graph, provenance).as_bytes())?;
    sink.flush()?;
    Ok(())
}

pub fn import_graph(text: &str) -> Result<(LigGraph, Provenance), GraphError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    let graph = doc.to_graph()?;
    Ok((graph, doc.provenance))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// (x ∨ ¬y ∨ ¬z) ∧ (¬x ∨ y ∨ z)
    fn figure_one() -> Formula {
        Formula::from_dimacs_clauses(3, &[&[1, -2, -3], &[-1, 2, 3]])
    }

    #[test]
    fn figure_one_counts() {
        let g = build_lig(&figure_one(), true);
        assert_eq!(g.num_literal_nodes(), 6);
        assert_eq!(g.num_clauses(), 2);
        assert_eq!(g.cl_edges().len(), 6);
        assert_eq!(g.var_edges(), vec![(0, 1), (2, 3), (4, 5)]);
        assert_eq!(g.num_nodes(), 8);
        assert_eq!(g.to_formula(), figure_one());

        let plain = build_lig(&figure_one(), false);
        assert!(plain.var_edges().is_empty());
    }

    #[test]
    fn index_convention() {
        let x2 = Var::new(2);
        assert_eq!(literal_index(x2.positive()), 2);
        assert_eq!(literal_index(x2.negative()), 3);
        assert_eq!(literal_of(3), x2.negative());
        assert_eq!(literal_of(literal_index(x2.positive()) ^ 1), x2.negative());
    }

    #[test]
    fn empty_formula() {
        let g = build_lig(&Formula::empty(0), true);
        assert_eq!(g.num_nodes(), 0);
        assert_eq!(g.to_formula(), Formula::empty(0));
        let json = graph_to_json(&g, &Provenance::default());
        assert!(json.contains("\"edges\":[]"));
        assert!(json.contains("\"variable_links\":[]"));
    }

    #[test]
    fn json_round_trip_and_stability() {
        let g = build_lig(&figure_one(), true);
        let prov = Provenance {
            source: Some("fig1.cnf".into()),
            chain: Some("CR:0.2:42".into()),
        };
        let json = graph_to_json(&g, &prov);
        assert_eq!(json, graph_to_json(&g, &prov));
        assert_eq!(
            json,
            concat!(
                r#"{"schema":"lig-graph","version":1,"#,
                r#""literal_index":"positive literal of variable v is 2*(v-1), negative literal is 2*(v-1)+1","#,
                r#""num_vars":3,"num_clauses":2,"var_edges":true,"#,
                r#""edges":[[0,0],[3,0],[5,0],[1,1],[2,1],[4,1]],"#,
                r#""variable_links":[[0,1],[2,3],[4,5]],"#,
                r#""provenance":{"source":"fig1.cnf","chain":"CR:0.2:42"}}"#,
                "\n"
            )
        );
        let (back, back_prov) = import_graph(&json).unwrap();
        assert_eq!(back, g);
        assert_eq!(back_prov, prov);
    }

    #[test]
    fn malformed_graphs_rejected() {
        assert!(matches!(
            LigGraph::new(1, 1, vec![(2, 0)], false),
            Err(GraphError::DanglingEdge { .. })
        ));
        assert!(matches!(
            LigGraph::new(1, 1, vec![(0, 1)], false),
            Err(GraphError::DanglingEdge { .. })
        ));
        assert!(matches!(
            LigGraph::new(1, 1, vec![(0, 0), (0, 0)], false),
            Err(GraphError::DuplicateEdge { .. })
        ));
        let bad = r#"{"schema":"lig-graph","version":2,"literal_index":"","num_vars":0,"num_clauses":0,"var_edges":false,"edges":[],"variable_links":[],"provenance":{"source":null,"chain":null}}"#;
        assert!(matches!(import_graph(bad), Err(GraphError::Schema(_))));
        let inconsistent = r#"{"schema":"lig-graph","version":1,"literal_index":"","num_vars":1,"num_clauses":0,"var_edges":true,"edges":[],"variable_links":[],"provenance":{"source":null,"chain":null}}"#;
        assert!(matches!(
            import_graph(inconsistent),
            Err(GraphError::Schema(_))
        ));
    }

    #[test]
    fn empty_clause_survives() {
        let f = Formula::from_dimacs_clauses(2, &[&[1], &[]]);
        assert_eq!(build_lig(&f, true).to_formula(), f);
    }

    #[test]
    fn adjacency_and_matrix() {
        let g = build_lig(&figure_one(), true);
        let adj = g.adjacency();
        // literal x: clause 0 and its negation
        assert_eq!(adj[0], vec![6, 1]);
        assert_eq!(adj[6], vec![0, 3, 5]);
        let m = g.incidence_matrix();
        assert_eq!(m.len(), 6);
        assert_eq!(m.iter().flatten().map(|&b| b as usize).sum::<usize>(), 6);
    }
}
