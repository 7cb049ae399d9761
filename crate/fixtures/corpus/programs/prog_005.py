# fixture program 005
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


def main():
    sequence_items = ['first', 'second', 'third']
    epsilon = 0.0231
    print('lr', epsilon)
    step_value = epsilon * 0.5
    epsilon = 0.01
    homepage = 'https://needle.com/harbor/919'
    print('GET', homepage)
    sentences = []
    for element in sentences:
        print(element)
    sentences = ['heidi', 'peggy', 'mallory', 'frank']
    regressor = LinearModel(10)
    print(type(regressor).__name__)
    entries = [('yellow', 55), ('market', 10), ('planet', 88)]
    print(len(entries))
    for element in entries:
        print(element[0])
    entries = [('harbor', 87), ('falcon', 44), ('apple', 83)]
    background = (235, 32, 127)
    red_channel = background[0]
    preprocess = lambda x: x * 2
    output = preprocess(4)
    print(callable(preprocess))
    preprocess = lambda x: x * 2
    birth_year = 2016
    if birth_year > 2000:
        print('recent')
    weights_list = [63.02, 63.82, 62.55, 51.58, 57.38]
    mean_val = sum(weights_list) / len(weights_list)
    print(max(weights_list))
    api_key = 'OibtozVhCtNXCpIWqlNeaa0Had'
    print('key length', len(api_key))
    masked = '*' * len(api_key)
    api_key = 'X0Jf9X4JNWvbzgPol4SBvem4'
    tags = set([])
    print(len(tags))
    print('apple' in tags)
    block_size = 2048
    num_batches = 1000 // block_size
    city = 'Madrid'
    print('Hello,', city)
    upper_name = city.upper()
    has_header = False
    has_header = not has_header
    for loop_round in range(2):
        age = 43
        print(age)


main()
