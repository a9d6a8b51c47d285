# coding=utf-8

"""
Contains a Report class for representing the outcome of an operation, in
plain text or as a structured XML document.
"""

import hashlib
import json
import re

import lxml.etree
import lxml.objectify

from ordalab.data.exception_map import EXIT_ERROR, EXIT_OK, EXIT_VIOLATION, from_code
from ordalab.models import to_plain
from ordalab.util import snake_to_camel

E = lxml.objectify.ElementMaker(annotate=False)

TAG_REGEX = re.compile(r'^[A-Za-z_][A-Za-z0-9_.-]*$')

OK = 'ok'
VIOLATION = 'violation'
ERROR = 'error'


def OE(element, value, transform=lambda x: x):
    """
    Create an Optional Element.

    Returns an Element as ElementMaker would, unless value is None. Optionally the value can be
    transformed through a function.

    >>> OE('elem', None) is None
    True

    >>> lxml.etree.tostring(OE('elem', 'value'))
    b'<elem>value</elem>'

    >>> lxml.etree.tostring(OE('elem', 3, str))
    b'<elem>3</elem>'
    """
    return E(element, transform(value)) if value is not None else None


def _tag(key):
    tag = snake_to_camel(str(key))
    return tag if TAG_REGEX.match(tag) else 'item'


def _element(tag, value):
    """Build an element for plain data; lists become <item> children."""
    if isinstance(value, dict):
        return E(tag, *[_element(_tag(key), item) for key, item in sorted(value.items())])
    if isinstance(value, list):
        return E(tag, *[_element('item', item) for item in value])
    if isinstance(value, bool):
        return E(tag, 'true' if value else 'false')
    return E(tag, '' if value is None else str(value))


def _lines(value, indent=''):
    """Render plain data as indented `key: value` and `- item` lines."""
    lines = []
    if isinstance(value, dict):
        for key, item in sorted(value.items()):
            if isinstance(item, (dict, list)) and item:
                lines.append('%s%s:' % (indent, key))
                lines.extend(_lines(item, indent + '  '))
            else:
                lines.append('%s%s: %s' % (indent, key, _scalar(item)))
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, dict) and item:
                nested = _lines(item, indent + '  ')
                lines.append('%s- %s' % (indent, nested[0].lstrip()))
                lines.extend(nested[1:])
            elif isinstance(item, list) and item and any(isinstance(sub, (dict, list)) for sub in item):
                lines.append('%s-' % indent)
                lines.extend(_lines(item, indent + '  '))
            else:
                lines.append('%s- %s' % (indent, _scalar(item)))
    else:
        lines.append(indent + _scalar(value))
    return lines


def _scalar(value):
    if isinstance(value, bool):
        return 'true' if value else 'false'
    if value is None:
        return '-'
    if isinstance(value, list):
        return '[' + ', '.join(_scalar(item) for item in value) + ']'
    if isinstance(value, dict):
        return '{}'
    return str(value)


class Report(object):
    """
    The outcome of one operation: what was asked, what came out, and the
    certificate backing it. Errors are reports too, with status `error` (or
    `violation` when a certificate check failed) and the error code.
    """

    def __init__(self, command, inputs, result, certificate=None, status=OK, code=None, message=None):
        self.command = command
        self.inputs = to_plain(inputs)
        self.result = to_plain(result)
        self.certificate = to_plain(certificate)
        self.status = status
        self.code = code
        self.message = message

    @property
    def digest(self):
        """The first 16 hex digits of the SHA-256 of the canonical inputs."""
        canonical = json.dumps(self.inputs, sort_keys=True, separators=(',', ':'))
        return hashlib.sha256(canonical.encode('utf-8')).hexdigest()[:16]

    @property
    def exit_status(self):
        return {OK: EXIT_OK, VIOLATION: EXIT_VIOLATION}.get(self.status, EXIT_ERROR)

    def as_dict(self):
        data = {
            'command': self.command,
            'digest': self.digest,
            'status': self.status,
            'inputs': self.inputs,
            'result': self.result,
        }
        if self.certificate is not None:
            data['certificate'] = self.certificate
        if self.code is not None:
            data['code'] = self.code
            data['message'] = self.message
        return data

    def as_xml(self):
        children = [
            E.command(self.command),
            E.digest(self.digest),
            E.status(self.status),
            OE('code', self.code, str),
            OE('message', self.message),
            _element('inputs', self.inputs),
            _element('result', self.result),
            _element('certificate', self.certificate) if self.certificate is not None else None,
        ]
        return E.report(*[child for child in children if child is not None])

    def to_xml(self):
        return lxml.etree.tostring(self.as_xml(), pretty_print=True).decode('utf-8')

    def raise_for_status(self):
        """Re-raise the error this report stands for, if any."""
        if self.status != OK:
            klass = from_code(self.code)
            raise klass(self.message or self.command, self.code)

    def __bool__(self):
        return self.status == OK

    __nonzero__ = __bool__

    def __str__(self):
        return '\n'.join(_lines(self.as_dict()))

    def __repr__(self):
        return '<Report(%s, %s)>' % (self.command, self.status)
