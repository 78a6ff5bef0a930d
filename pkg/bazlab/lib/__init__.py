# Computational modules. Import them directly, e.g. `from bazlab.lib import coeffs`.
