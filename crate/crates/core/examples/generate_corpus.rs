//! Regenerates `corpus/corpus.jsonl` from the independent oracles only:
//! brute-force resolution, the Kauffman bracket, the Burau determinant and
//! the hook-content formula. The skein engine is never called.
//!
//! Usage: `cargo run -p brauerlink-core --example generate_corpus > crates/core/corpus/corpus.jsonl`

use brauerlink::corpus::{
    alexander_oracle, brute_force_value, jones_oracle, CorpusEntry, ExpectedKind, ExpectedValue, InputFormat,
};
use brauerlink::{parse_braid, parse_pd, Labeling, LinkDiagram, Partition, RingElem};

const LINKS: &[(&str, InputFormat, &str)] = &[
    ("unknot", InputFormat::Braid, "braid 1:"),
    ("unknot-positive-kink", InputFormat::Braid, "braid 2: 1"),
    ("unknot-negative-kink", InputFormat::Braid, "braid 2: -1"),
    ("unlink-2", InputFormat::Braid, "braid 2:"),
    ("unlink-3", InputFormat::Braid, "braid 3:"),
    ("hopf-positive", InputFormat::Braid, "braid 2: 1 1"),
    ("hopf-negative", InputFormat::Braid, "braid 2: -1 -1"),
    ("trefoil-right", InputFormat::Braid, "braid 2: 1 1 1"),
    ("trefoil-left", InputFormat::Braid, "braid 2: -1 -1 -1"),
    ("figure-eight", InputFormat::Braid, "braid 3: 1 -2 1 -2"),
    ("whitehead", InputFormat::Braid, "braid 3: 1 1 -2 1 -2"),
    (
        "trefoil-right-pd",
        InputFormat::Pd,
        r#"{"crossings":[{"arcs":[1,5,2,4],"sign":1},{"arcs":[3,1,4,6],"sign":1},{"arcs":[5,3,6,2],"sign":1}]}"#,
    ),
    (
        "figure-eight-pd",
        InputFormat::Pd,
        r#"{"crossings":[{"arcs":[4,2,5,1],"sign":1},{"arcs":[8,6,1,5],"sign":1},{"arcs":[6,3,7,4],"sign":-1},{"arcs":[2,7,3,8],"sign":-1}]}"#,
    ),
];

/// `∏ [t + c(x)] / [h(x)]` over the boxes of `λ`.
fn hook_content(lambda: &Partition) -> RingElem {
    let parts = lambda.parts();
    let cols = lambda.transpose();
    let mut value = RingElem::one();
    for (i, &row) in parts.iter().enumerate() {
        for j in 0..row as usize {
            let content = j as i32 - i as i32;
            let hook = (row as usize - j) + (cols.parts()[j] as usize - i) - 1;
            value = &value * &brauerlink::quantum_int(1, content);
            value = value.checked_div(&brauerlink::quantum_int(0, hook as i32)).unwrap();
        }
    }
    value
}

fn main() {
    for &(name, format, input) in LINKS {
        let (diagram, braid): (LinkDiagram, _) = match format {
            InputFormat::Braid => {
                let b = parse_braid(input).unwrap();
                (b.closure(), Some(b))
            }
            InputFormat::Pd => (parse_pd(input).unwrap(), None),
        };
        let components = diagram.components().len();
        let mut expected = vec![
            ExpectedValue {
                invariant: ExpectedKind::Homfly,
                labels: None,
                value: brute_force_value(&diagram).unwrap(),
                source: "brute-force resolver".into(),
            },
            ExpectedValue {
                invariant: ExpectedKind::Jones,
                labels: None,
                value: jones_oracle(&diagram).unwrap(),
                source: "Kauffman bracket".into(),
            },
        ];
        if let Some(b) = &braid {
            expected.push(ExpectedValue {
                invariant: ExpectedKind::Alexander,
                labels: None,
                value: alexander_oracle(b).unwrap(),
                source: "reduced Burau determinant".into(),
            });
        }
        if name == "unknot" {
            for p in [vec![2], vec![1, 1], vec![2, 1], vec![3]] {
                let lambda = Partition::new(p).unwrap();
                expected.push(ExpectedValue {
                    invariant: ExpectedKind::Colored,
                    labels: Some(Labeling::from_labels(vec![lambda.clone()])),
                    value: hook_content(&lambda),
                    source: "hook-content formula".into(),
                });
            }
        }
        let entry = CorpusEntry {
            name: name.into(),
            format,
            input: input.into(),
            components,
            writhe: diagram.writhe(),
            expected,
        };
        println!("{}", serde_json::to_string(&entry).unwrap());
    }
}
