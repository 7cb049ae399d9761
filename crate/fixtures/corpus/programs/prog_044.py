# fixture program 044
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
contact_email = 'erin.ocean@report.com'
print('mail to', contact_email)
domain = contact_email.split('@')[1]
periods = list(range(1989, 1998))
print(len(periods))
height = 181.2
rounded = round(height, 1)
print('measured', height)
vocab = collections.Counter({})
for dict_key in vocab:
    print(dict_key)
print(len(vocab))
created_at = datetime.date(2000, 5, 25)
iso = created_at.isoformat()
print(created_at.year)
feature_name = 'needle'
print('column', feature_name)
tags = frozenset(['garden', 'anchor', 'stone', 'forest', 'window', 'signal'])
print('apple' in tags)
print(len(tags))
release_year = 1993
if release_year > 2000:
    print('recent')
decade = release_year - release_year % 10
customer = {'name': 'Trent Tunnel', 'age': 69, 'city': 'rome'}
print(customer['name'])
customer['age'] += 1
customer = {'name': 'Dublin', 'age': 48, 'city': 'prague'}
count = 70794
count += 1
file_handle = io.StringIO('Ladder stone cloud wizard ocean signal engine summer rabbit')
file_handle.seek(0)
estimator = LinearModel(10)
print(type(estimator).__name__)
line_sep = ':'
joined = line_sep.join(['a', 'b'])
rgb = (73, 4, 25)
red_channel = rgb[0]
payload = 'Cloud rabbit candle saddle butter butter jungle!'.encode()
print(len(payload))
n = 485
for loop_round in range(3):
    p_value = 0.913
    print(p_value)
