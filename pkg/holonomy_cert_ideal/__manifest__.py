# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

{
    "name": "Holonomy Certificates Ideals",
    "summary": "Buchberger Groebner bases, elimination, saturation and membership",
    "version": "1.0.0",
    "category": "Mathematics",
    "website": "https://github.com/holonomy-cert/holonomy-cert",
    "author": "Holonomy Cert Contributors",
    "license": "AGPL-3",
    "installable": True,
    "depends": ["holonomy_cert_base"],
    "external_dependencies": {"python": ["sympy"]},
}
