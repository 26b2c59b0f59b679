//! Text renderings of a generated sequence.

use clap::ValueEnum;
use motzkin_shadows::sequence::{IntegerSequence, SequenceId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    #[value(name = "bfile")]
    BFile,
}

/// Render the sequence in the chosen format. Every format encodes the same
/// term values; negative numbers use the ASCII hyphen-minus.
pub fn render(id: SequenceId, sequence: &IntegerSequence, format: Format) -> String {
    match format {
        Format::Plain => {
            let terms: Vec<String> = sequence.terms().iter().map(|t| t.to_string()).collect();
            format!("{}\n", terms.join(", "))
        }
        Format::Csv => {
            let mut out = String::from("n,a(n)\n");
            for (index, term) in sequence.iter() {
                out.push_str(&format!("{index},{term}\n"));
            }
            out
        }
        Format::BFile => {
            let mut out = String::new();
            for (index, term) in sequence.iter() {
                out.push_str(&format!("{index} {term}\n"));
            }
            out
        }
        Format::Json => {
            let terms: Vec<String> = sequence.terms().iter().map(|t| t.to_string()).collect();
            let object = serde_json::json!({
                "id": id.as_str(),
                "offset": sequence.offset(),
                "terms": terms,
            });
            format!("{object}\n")
        }
    }
}
