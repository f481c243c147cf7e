import cmath


def principal_sqrt(z: complex) -> complex:
    """Square root with positive real part, or positive imaginary part on the
    imaginary axis."""
    root = cmath.sqrt(z)
    # cmath follows the sign of a negative zero imaginary part
    if root.real == 0.0 and root.imag < 0.0:
        return -root
    return root
