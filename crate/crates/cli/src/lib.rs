//! Front end for `convex-tri`: instance files, SVG drawings and the
//! `convtri` command set.

mod app;
mod io;
mod svg;

pub use app::{run, Cli, Command, PackTarget, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK, EXIT_VERIFY};
pub use io::{parse_instance, serialize_instance, serialize_lines, CliError, InstanceDocument};
pub use svg::{render_svg, vertex_position};
