fn main() {
    // Die quietly when the output pipe closes (e.g. `qse ... | head`).
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(qse::cli::run(std::env::args_os()));
}
