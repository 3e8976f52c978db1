# Driving the command-line front end from Python; the same jobs run as
#   homolog ext --input demos/jobs/ext_z6.json --pretty
import io
import pathlib

from homolog.cli import main

jobs = pathlib.Path(__file__).parent / "jobs"
for command, name in [("ext", "ext_z6"), ("biduality", "biduality"), ("ext", "poly_ext")]:
    out, err = io.StringIO(), io.StringIO()
    code = main([command, "--input", str(jobs / f"{name}.json"), "--pretty"], stdout=out, stderr=err)
    print(f"$ homolog {command} --input jobs/{name}.json --pretty   (exit {code})")
    print(out.getvalue() + err.getvalue())
