# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

{
    "name": "Holonomy Certificates",
    "summary": "Command line front end emitting reports and JSON certificates",
    "version": "1.0.0",
    "category": "Mathematics",
    "website": "https://github.com/holonomy-cert/holonomy-cert",
    "author": "Holonomy Cert Contributors",
    "license": "AGPL-3",
    "installable": True,
    "depends": [
        "holonomy_cert_base",
        "holonomy_cert_ideal",
        "holonomy_cert_realroots",
        "holonomy_cert_variety",
        "holonomy_cert_filling",
    ],
    "external_dependencies": {"python": ["chardet", "numpy", "sympy"]},
}
