"""Algorithms for MPC Codes: fields, codes, decoders and analysis."""
