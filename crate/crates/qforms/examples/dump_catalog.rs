//! Prints the machine-readable identity catalog to stdout.
//!
//! The repository ships the output at `crates/qforms/data/identities.json`;
//! regenerate with:
//!
//! ```text
//! cargo run -p qforms --example dump_catalog > crates/qforms/data/identities.json
//! ```

fn main() {
    print!("{}", qforms::identity::catalog_json());
}
