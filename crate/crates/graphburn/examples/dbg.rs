use std::time::Instant;
fn path(n: usize) -> graphburn::Graph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    graphburn::Graph::from_edges(n, &edges).unwrap()
}
fn main() {
    let t0 = Instant::now();
    for n in 1..=36 {
        let g = path(n);
        let t = Instant::now();
        let (k, _) = graphburn::exact::burning_number(&g, &graphburn::SearchLimits::default()).unwrap();
        assert_eq!(k, (n as f64).sqrt().ceil() as usize);
        if n >= 30 { println!("P_{n}: k={k} in {:?}", t.elapsed()); }
    }
    println!("total paths: {:?}", t0.elapsed());
}
