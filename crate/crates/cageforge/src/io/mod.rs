//! File formats: the graph6 interchange format and a commented plain-text
//! edge list. Both writers are deterministic byte-for-byte; both readers
//! report parse failures with positions.

mod edge_list;
mod graph6;

pub use edge_list::{read_edge_list, write_edge_list, EdgeListError, EdgeListFile, EdgeListMeta};
pub use graph6::{from_graph6, to_graph6, to_graph6_with_header, Graph6Error, HEADER};
