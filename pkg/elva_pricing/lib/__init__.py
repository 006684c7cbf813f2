"""Library of numerical presets, Levy model parameter sets and mortality tables."""
