# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

{
    "name": "Holonomy Certificates Character Variety",
    "summary": "Character curve of m137, irreducibility, SU(2)/SL(2,R) split, "
    "representations and A-polynomial",
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
    ],
    "external_dependencies": {"python": ["mpmath", "numpy"]},
}
