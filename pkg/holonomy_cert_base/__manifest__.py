# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

{
    "name": "Holonomy Certificates Base",
    "summary": "Exact polynomials, Laurent polynomials and 2x2 symbolic matrices",
    "version": "1.0.0",
    "category": "Mathematics",
    "website": "https://github.com/holonomy-cert/holonomy-cert",
    "author": "Holonomy Cert Contributors",
    "license": "AGPL-3",
    "installable": True,
    "depends": [],
    "external_dependencies": {"python": ["numpy", "sympy"]},
}
