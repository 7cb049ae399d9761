# fixture program 182
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
start_year = 1985
print('year', start_year)
if start_year > 2000:
    print('recent')
embeddings = np.arange(9).reshape(3, 3)
embeddings = embeddings * 2
today = datetime.date(2001, 1, 12)
iso = today.isoformat()
entries = [('forest', 2), ('bridge', 31), ('ocean', 35), ('ladder', 68)]
for element in entries:
    print(element[0])
classifier = LinearModel(10)
prediction = classifier.predict([1, 2, 3])
year_range = list(range(1953, 1955))
print(len(year_range))
salary = 4938.93
salary = round(salary * 1.1, 2)
rewards = [99.17, 10.82, 39.02, 98.35, 86.03, 62.48]
rewards.sort()
vocabulary_set = set(['saddle', 'ladder', 'garden', 'window', 'winter', 'report'])
print('apple' in vocabulary_set)
print(len(vocabulary_set))
s = 'Castle python winter report forest jungle vector'
tmp = 'Planet saddle report rabbit zebra signal needle!'
n = 1840
for loop_round in range(3):
    price = 2798.79
    print(price)
