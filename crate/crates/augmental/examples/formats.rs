//! The two file formats (canonical JSON and plain text), the bundled corpus,
//! and round-tripping guarantees.
//!
//! Run with: cargo run --example formats

use augmental::io::{
    complex_from_str, complex_to_json_string, complex_to_text,
};
use augmental::{corpus, Complex};

fn main() {
    // JSON: "void" distinguishes the two degenerate complexes.
    println!("Void as JSON:  {}", complex_to_json_string(&Complex::void()));
    println!("{{∅}} as JSON:   {}", complex_to_json_string(&Complex::empty()));
    let theta = corpus::get("theta").unwrap();
    println!("⊖ as JSON:     {}", complex_to_json_string(&theta));

    // Text: one facet per line; VOID and EMPTY keywords for the degenerate
    // complexes; # starts a comment.
    println!("\n⊖ as text:\n{}", complex_to_text(&theta));
    let parsed = complex_from_str("# the hollow triangle\n1 2\n2 3\n1 3\n").unwrap();
    println!("parsed text equals corpus S¹₃? {}", parsed == corpus::get("s1_3").unwrap());

    // Both formats round-trip every corpus complex exactly.
    let mut all_ok = true;
    for (name, _) in corpus::names() {
        let c = corpus::get(name).unwrap();
        let via_json = complex_from_str(&complex_to_json_string(&c)).unwrap();
        let via_text = complex_from_str(&complex_to_text(&c)).unwrap();
        if via_json != c || via_text != c {
            all_ok = false;
            println!("round-trip FAILED for {name}");
        }
    }
    println!("\nall {} corpus complexes round-trip: {}", corpus::names().len(), all_ok);
}
