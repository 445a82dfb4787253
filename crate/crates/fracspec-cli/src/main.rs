fn main() { fracspec::jacobi::bench_fft(); }
