use brauerlink::cabling::{colored_value_with, CablingConfig, ColoredLink, Strategy};
use brauerlink::corpus::kauffman_bracket;
use brauerlink::skein::{EngineConfig, SkeinEngine};
use brauerlink::{Labeling, Partition};
use brauerlink_bench::{braid, BRAIDS};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn homfly(c: &mut Criterion) {
    let mut g = c.benchmark_group("homfly");
    for (name, _) in BRAIDS {
        let d = braid(name).closure();
        g.bench_with_input(BenchmarkId::new("memo", name), &d, |b, d| {
            b.iter(|| SkeinEngine::new(EngineConfig::default()).evaluate_closed(d).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("no_memo", name), &d, |b, d| {
            let config = EngineConfig {
                memo_capacity: 0,
                parallel: false,
            };
            b.iter(|| SkeinEngine::new(config.clone()).evaluate_closed(d).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("bracket_oracle", name), &d, |b, d| {
            b.iter(|| kauffman_bracket(d).unwrap())
        });
    }
    g.finish();
}

fn colored(c: &mut Criterion) {
    let mut g = c.benchmark_group("colored");
    g.sample_size(10);
    for (name, parts) in [("trefoil", vec![2]), ("trefoil", vec![1, 1]), ("figure_eight", vec![2])] {
        let b = braid(name);
        let labeling = Labeling::uniform(b.closure().components().len(), Partition::new(parts.clone()).unwrap());
        let cl = ColoredLink::from_braid(&b, labeling).unwrap();
        for strategy in [Strategy::Skein, Strategy::Trace] {
            let config = CablingConfig {
                strategy,
                ..CablingConfig::default()
            };
            let id = BenchmarkId::new(format!("{strategy:?}").to_lowercase(), format!("{name}_{parts:?}"));
            g.bench_function(id, |bench| {
                bench.iter(|| {
                    SkeinEngine::global().clear_memo();
                    colored_value_with(&cl, &config).unwrap()
                })
            });
        }
    }
    g.finish();
}

criterion_group!(benches, homfly, colored);
criterion_main!(benches);
