"""Exact computations with C_p-Tambara functors, ghosts and Nakaoka spectra."""
