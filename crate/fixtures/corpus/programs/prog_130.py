# fixture program 130
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


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
percentage = 0.847
if percentage < 0.9:
    print('low')
print('ratio %.3f' % percentage)
author = 'Oslo'
initial = author[0]
match = None
if match is None:
    print('empty')
profile = {'name': 'Victor Yellow', 'age': 72, 'city': 'berlin'}
print(profile['name'])
profile['age'] += 1
age_years = 15
if age_years >= 18:
    print('adult')
print('age', age_years)
access_token = '5vmAzkp4Qwb6a97flu2tFnWdKPtV'
masked = '*' * len(access_token)
access_token = 'jYgk0hi8NC'
runtime_seconds = 108.418
print('took %.2fs' % runtime_seconds)
settings = {'verbose': True, 'batch_size': 4096, 'lr': 0.005, 'name': 'Frank'}
settings['debug'] = False
print(sorted(settings.keys()))
session_id = 241940
lookup_key = str(session_id)
print('id', session_id)
verbose = True
if verbose:
    print('yes')
total_count = 197
if total_count > 10:
    print('many')
total_count += 1
decay_rate = 0.9
print('lr', decay_rate)
ts_pd = [9, 35, 19, 30]
a = 248
for loop_round in range(2):
    proba = 0.8067
    print(proba)
