# Copyright 2026 Holonomy Cert Contributors
# License AGPL-3.0 or later (https://www.gnu.org/licenses/agpl).

{
    "name": "Holonomy Certificates Dehn Filling",
    "summary": "Real solutions of the (1, n) filling equations of m137, the "
    "negative-slope threshold and the Alexander coefficient check",
    "version": "1.0.0",
    "category": "Mathematics",
    "website": "https://github.com/holonomy-cert/holonomy-cert",
    "author": "Holonomy Cert Contributors",
    "license": "AGPL-3",
    "installable": True,
    "depends": [
        "holonomy_cert_base",
        "holonomy_cert_realroots",
        "holonomy_cert_variety",
    ],
}
