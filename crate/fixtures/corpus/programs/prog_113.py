# fixture program 113
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
index_range = range(2, 17)
print(list(index_range)[:3])
estimator = DecisionTree(depth=4)
prediction = estimator.predict([1, 2, 3])
print(type(estimator).__name__)
estimator = LinearModel(3)
done = True
done = not done
if done:
    print('yes')
product_id = 998610
print('id', product_id)
sizes = [8, 35, 26, 7, 11, 34, 11, 17, 9, 6, 1, 14]
sizes.append(1)
sizes = [128, 133, 105, 115, 114, 115, 104, 127]
age = 63
print('age', age)
dataframe = pd.DataFrame({'age': [8, 34, 39], 'score': [19, 41, 1], 'price': [61, 33, 87]})
print(dataframe.shape)
kernel_matrix = np.arange(6).reshape(2, 3)
print(kernel_matrix.shape)
flat = kernel_matrix.flatten()
kernel_matrix = np.round(np.random.rand(2, 3), 2)
rows = [('pepper', 33), ('needle', 70), ('apple', 41)]
for element in rows:
    print(element[0])
print(len(rows))
recent_items = collections.deque([2010, 2003, 2028, 2008, 2004, 1990, 2008, 2029, 2019], maxlen=10)
recent_items.append(5)
print(len(recent_items))
elapsed_time = 65.244
print('took %.2fs' % elapsed_time)
minutes = elapsed_time / 60
elapsed_time = 115.639
df = pd.DataFrame({'city': [56, 28], 'age': [3, 46], 'score': [52, 69]})
xy = (46, -18)
for loop_round in range(2):
    delay = 9.357
    print(delay)
