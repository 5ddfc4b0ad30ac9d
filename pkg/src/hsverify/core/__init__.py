"""
hsverify core: parameter models, result models and errors.
"""
