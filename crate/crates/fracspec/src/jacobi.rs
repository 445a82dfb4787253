pub fn bench_fft() {
    use realfft::RealFftPlanner;
    use std::time::Instant;
    let mut planner = RealFftPlanner::<f64>::new();
    for &n in &[2048usize, 4096, 8192, 16384, 32768, 65536] {
        let fft = planner.plan_fft_forward(n);
        let mut buf = vec![0.5f64; n];
        let mut spec = fft.make_output_vec();
        let mut scratch = fft.make_scratch_vec();
        let reps = (1 << 24) / n;
        let t0 = Instant::now();
        for i in 0..reps {
            buf[i % n] = i as f64 * 1e-9;
            fft.process_with_scratch(&mut buf, &mut spec, &mut scratch).unwrap();
        }
        let us = t0.elapsed().as_secs_f64() * 1e6 / reps as f64;
        println!("rfft n={n}: {us:.1} us");
    }
    // lgamma throughput
    let t0 = std::time::Instant::now();
    let mut acc = 0.0;
    for i in 0..1_000_000 {
        acc += statrs::function::gamma::ln_gamma(1.0 + (i as f64) * 1e-3);
    }
    println!("lgamma 1e6 calls: {:.3}s (acc {acc:.3e})", t0.elapsed().as_secs_f64());
}
