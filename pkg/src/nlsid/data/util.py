import os.path as osp

from jinja2 import Template

from bpyutils import log
from bpyutils.util.system import read, write

from nlsid.__attr__ import __name__ as NAME
from nlsid.config   import PATH

logger = log.get_logger(name = NAME)

def render_template(*args, **kwargs):
    script = kwargs["template"]

    template_path = osp.join(PATH["TEMPLATES"], script)
    template = Template(read(template_path), trim_blocks = True, lstrip_blocks = True)

    rendered = template.render(*args, **kwargs)

    return rendered

def write_summary(bundle, output):
    logger.info("Writing run summary to %s..." % output)

    summary = render_template(template = "report.md", bundle = bundle, config = bundle.config,
        levels = bundle.levels, kinds = bundle.kinds())
    write(output, summary, force = True)

    return output
