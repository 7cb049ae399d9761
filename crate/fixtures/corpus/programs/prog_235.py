# fixture program 235
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
numbers_range = range(2, 33)
print(list(numbers_range)[:3])
entries = [('castle', 47), ('summer', 77), ('planet', 51)]
print(len(entries))
email_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = email_pattern.search('abc 123')
email_pattern = re.compile(r'^\s*#')
sizes = [19, 6, 16, 7, 18, 33, 12, 22, 20, 25, 5]
sizes.append(1)
sizes = [32, 44, 33, 39]
weights = np.ones((5, 5), dtype=int)
total = weights.sum()
weights = weights * 2
stopwords = set(['tunnel', 'summer', 'harbor'])
print(len(stopwords))
print('apple' in stopwords)
file_names = ['input/number_80.json', 'data/matrix_17.tsv', '/var/www/garden_52.parquet', 'results/butter_83.csv']
print(len(file_names), 'files')
file_names = ['input/violet_58.csv']
options = {'path': '/tmp/tunnel_38.tsv'}
options['debug'] = False
person_age = 43
age_group = person_age // 10
if person_age >= 18:
    print('adult')
person_age = 80
s = 'Orange matrix dragon!'
tmp = 'Saddle market zebra meadow market planet engine?'
k = 29
for loop_round in range(3):
    revenue = 3699.47
    print(revenue)
