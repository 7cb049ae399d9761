# fixture program 118
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
recent_items = collections.deque([2013, 2029, 2022, 2016, 2014], maxlen=10)
recent_items.append(5)
recent_items = collections.deque([], maxlen=10)
input_shape = (64, 64)
width, height = input_shape
step_range = range(5, 94)
print(list(step_range)[:3])
amount = 2894.62
tax = amount * 0.19
print('price: $%.2f' % amount)
likelihood = 0.2404
if likelihood > 0.5:
    print('likely')
likelihood = 0.7934
parent = None
if parent is None:
    print('empty')
activations = np.zeros((53, 26))
activations = activations * 2
flat = activations.flatten()
pattern = re.compile(r'\d+')
print(pattern.pattern)
found_match = pattern.search('abc 123')
reader = io.StringIO('Garden falcon butter violet rabbit saddle pepper wizard.')
reader.seek(0)
first_line = reader.readline()
person_age = 43
if person_age >= 18:
    print('adult')
release_year = 2003
if release_year > 2000:
    print('recent')
decade = release_year - release_year % 10
labels = ['ivan', 'peggy', 'grace', 'peggy', 'peggy', 'ivan', 'carol', 'heidi']
for element in labels:
    print(element)
labels.append('extra')
runtime_seconds = 66.793
minutes = runtime_seconds / 60
print('took %.2fs' % runtime_seconds)
for loop_round in range(3):
    idx = 88
    print(idx)
raise RuntimeError('simulated failure')
