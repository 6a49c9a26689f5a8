fn main() {
    // OpenBLAS carries the full LAPACK interface on this platform.
    println!("cargo:rustc-link-lib=dylib=openblas");
}
