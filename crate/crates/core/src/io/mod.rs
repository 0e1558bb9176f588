//! Text formats: the group-spec mini-language, subset literals, and the
//! Cayley-table file format.

mod literal;
mod spec;
mod table_file;

pub use literal::{parse_finite_subset, parse_lattice_subset};
pub use spec::{parse_group_spec, AnyGroup, GroupSpec, SpecSource};
pub use table_file::{format_table, parse_table, read_table, write_table};
