"""Presets de benchmark y esquemas versionados de salida"""
