# shiftwave/optics/angular_spectrum.py

"""
Angular spectrum propagation and known-phase correction.
"""

from typing import Tuple

import numpy as np
from scipy import fft

from shiftwave.core import ComplexField, PhaseMap
from shiftwave.optics.models import PropagationParams


def transfer_function(shape: Tuple[int, int], params: PropagationParams) -> np.ndarray:
    """H(f) = exp(j 2 pi z sqrt(1/lambda^2 - fx^2 - fy^2)); 0 for evanescent f."""
    fy = fft.fftfreq(shape[0], d=params.pitch)
    fx = fft.fftfreq(shape[1], d=params.pitch)
    argument = 1.0 / params.wavelength**2 - fy[:, None] ** 2 - fx[None, :] ** 2
    propagating = argument > 0
    kz = np.sqrt(np.where(propagating, argument, 0.0))
    return np.where(propagating, np.exp(2j * np.pi * params.distance * kz), 0.0)


def pad_center(data: np.ndarray, factor: int) -> Tuple[np.ndarray, Tuple[slice, slice]]:
    """Zero-pad to ``factor`` times the size; returns the array and the crop window."""
    if factor == 1:
        return data, (slice(None), slice(None))
    height, width = data.shape
    padded = np.zeros((height * factor, width * factor), dtype=np.complex128)
    top = (height * factor - height) // 2
    left = (width * factor - width) // 2
    window = (slice(top, top + height), slice(left, left + width))
    padded[window] = data
    return padded, window


def propagate_array(data: np.ndarray, params: PropagationParams) -> np.ndarray:
    """Propagate a complex array; the result keeps the padded size."""
    padded, _ = pad_center(np.asarray(data, dtype=np.complex128), int(params.padding))
    spectrum = fft.fft2(padded)
    return fft.ifft2(spectrum * transfer_function(padded.shape, params))


def propagate_free_space(field: ComplexField, params: PropagationParams) -> ComplexField:
    """Propagate ``field`` by ``params.distance`` with the angular spectrum method.

    Padding (``params.padding`` > 1) suppresses wrap-around; the output is
    cropped back to the input size.
    """
    _, window = pad_center(field.data, int(params.padding))
    return ComplexField(propagate_array(field.data, params)[window])


def correct_known_phase(field: ComplexField, screen: PhaseMap) -> ComplexField:
    """Multiply by the conjugate of a known phase screen: field * e^{-j screen}."""
    if field.shape != screen.shape:
        raise ValueError(f"Shape mismatch: field {field.shape} vs screen {screen.shape}")
    return ComplexField(field.data * np.exp(-1j * screen.data))
