# fixture program 001
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
record = {'name': 'Bob Rabbit', 'age': 11, 'city': 'oslo'}
print(record['name'])
record['age'] += 1
first_name = 'Judy'
print('Hello,', first_name)
background = (53, 157, 98)
red_channel = background[0]
background = (253, 43, 1)
decay_rate = 0.1
step_value = decay_rate * 0.5
today = datetime.datetime(2000, 9, 2, 7, 48)
iso = today.isoformat()
print(today.year)
today = datetime.datetime(2009, 8, 6, 3, 52)
threshold = 0.1
print('p=%.2f' % threshold)
threshold = min(1.0, max(0.0, threshold))
threshold = 0.109
text = 'Rabbit falcon ladder engine vector dragon?'
text = text.strip()
print(text)
done = True
done = not done
embeddings = np.round(np.random.rand(3, 6), 2)
embeddings = embeddings * 2
k = 69
x = -16.3
a = 118
for loop_round in range(4):
    likelihood = 0.6
    print(likelihood)
